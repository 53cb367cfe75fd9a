#include "conegeo/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "conegeo/json_io.hpp"
#include "doctest.h"

using namespace conegeo;

TEST_SUITE("harness") {

TEST_CASE("counter rng is a pure function of seed and draw index") {
  CounterRng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CounterRng c = CounterRng(7).fork(1), d = CounterRng(7).fork(2);
  CHECK(c.next_u64() != d.next_u64());
  CounterRng e(7);
  double mean = 0.0;
  for (int i = 0; i < 2000; ++i) mean += e.next_gaussian();
  CHECK(std::abs(mean / 2000.0) < 0.1);
}

TEST_CASE("gen_bounded_rep respects the condition target") {
  const Tolerances tol;
  SUBCASE("cond 1 keeps the representation unitary") {
    const Representation rep =
        gen_bounded_rep({RepSpec::Family::Dihedral, 5, 2}, 1.0, 71);
    CHECK(rep.image_group(100).is_unitary());
    CHECK(rep.homomorphism_residual() < 1e-10);
  }
  SUBCASE("conjugated regular representation stays norm bounded") {
    const Representation rep =
        gen_bounded_rep({RepSpec::Family::CyclicRegular, 4, 4}, 4.0, 72);
    CHECK(rep.order() == 4);
    const MatrixGroup g = rep.image_group(100);
    CHECK(group_size_norm(g) <= 4.0 + 1e-9);
    CHECK(rep.homomorphism_residual() <= tol.group);
  }
  SUBCASE("the conjugator condition number is exact") {
    CounterRng rng(73);
    const PosDefMatrix s = random_posdef_cond(4, 3.7, rng);
    CHECK(s.condition() == doctest::Approx(3.7).epsilon(1e-8));
  }
  SUBCASE("bad specs are rejected") {
    CHECK_THROWS_AS(
        gen_bounded_rep({RepSpec::Family::Cyclic, 4, 0}, 2.0, 74), BadSpec);
    CHECK_THROWS_AS(
        gen_bounded_rep({RepSpec::Family::Cyclic, 4, 2}, 0.5, 75), BadSpec);
  }
}

TEST_CASE("suite determinism at a reduced scale") {
  ExperimentConfig cfg;
  cfg.seed = 99;
  cfg.dims = {2, 3};
  cfg.trials = 0.02;
  const SuiteReport a = run_suite(cfg, "geometry");
  const SuiteReport b = run_suite(cfg, "geometry");
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].instances == b.checks[i].instances);
    CHECK(a.checks[i].worst_margin == b.checks[i].worst_margin);
  }
}

TEST_CASE("empty trial count passes vacuously") {
  ExperimentConfig cfg;
  cfg.trials = 0.0;
  cfg.dims = {2};
  const SuiteReport report = run_suite(cfg, "geometry");
  CHECK(report.all_pass());
  for (const auto& c : report.checks) CHECK(c.instances == 0);
}

TEST_CASE("check registry covers every suite") {
  for (const auto& name : suite_names()) CHECK(!check_ids(name).empty());
  CHECK(check_ids().size() >= 40);
  CHECK_THROWS_AS(run_suite(ExperimentConfig{}, "nonsense"), BadSpec);
}

TEST_CASE("matrix json round trip and validation") {
  CounterRng rng(76);
  const CMatrix m = random_complex_matrix(3, rng);
  const CMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK((m - back).norm() == 0.0);  // exact decimal round trip

  CHECK_THROWS_AS(
      matrix_from_json("{\"dim\":2,\"entries\":[[[1,0]],[[0,0],[1,0]]]}"),
      IoError);
  CHECK_THROWS_AS(matrix_from_json("{\"dim\":2}"), IoError);
  CHECK_THROWS_AS(matrix_from_json("not json"), IoError);

  SUBCASE("corrupted files surface the path") {
    const std::string path = "harness_test_corrupt.json";
    {
      std::ofstream out(path);
      out << "{\"dim\": 2, \"entries\": [[";
    }
    try {
      read_matrix_file(path);
      CHECK(false);
    } catch (const IoError& e) {
      CHECK(std::string(e.what()).find(path) != std::string::npos);
    }
    std::remove(path.c_str());
  }
}

TEST_CASE("group json round trip") {
  const Representation rep = rep_dihedral(3, 0);
  const std::string text = group_to_json(
      {rep.images[1], rep.images[2]});
  const auto gens = group_from_json(text);
  REQUIRE(gens.size() == 2);
  CHECK((gens[0] - rep.images[1]).norm() == 0.0);
  const MatrixGroup g = close_group(gens);
  CHECK(g.order() == 6);
}

TEST_CASE("reports serialize one record per check plus a summary") {
  ExperimentConfig cfg;
  cfg.trials = 0.01;
  cfg.dims = {2};
  const SuiteReport report = run_suite(cfg, "geometry");
  const std::string jsonl = report.to_jsonl();
  size_t lines = 0;
  for (char ch : jsonl)
    if (ch == '\n') ++lines;
  CHECK(lines == report.checks.size() + 1);
  CHECK(jsonl.find("\"summary\"") != std::string::npos);
}

}  // TEST_SUITE
