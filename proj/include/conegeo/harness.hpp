#pragma once

// Instance generators, the statement-verification suites, experiment
// configuration, and report persistence. Checks are registered with stable
// ids; per-check RNG streams are derived from the config seed and the check
// id, so identical configs reproduce identical reports.

#include <string>
#include <vector>

#include "conegeo/interpolate.hpp"
#include "conegeo/splitting.hpp"
#include "conegeo/unitarize.hpp"

namespace conegeo {

struct ExperimentConfig {
  std::uint64_t seed = 20260810;
  std::vector<int> dims = {2, 4, 8, 16};
  /// Scales every per-check instance count; 1.0 runs the full defaults,
  /// 0 runs no instances (checks pass vacuously).
  double trials = 1.0;
  Tolerances tol;
  std::string out_path;  // JSONL report (empty: skip)
  std::string csv_path;  // (log|H|, log Sim) scatter (empty: skip)
  int threads = 0;       // 0: hardware default; CONEGEO_THREADS caps it
};

struct CheckRecord {
  std::string id;
  std::string anchor;  // statement label the check verifies
  int instances = 0;
  /// Smallest observed slack against the pinned tolerance; >= 0 passes.
  double worst_margin = 0.0;
  bool pass = true;
  double runtime_s = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckRecord> checks;
  std::vector<std::pair<double, double>> scatter;  // (log|H|, log Sim)
  std::uint64_t seed = 0;
  std::vector<int> dims;
  double total_runtime_s = 0.0;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  std::string to_jsonl() const;
  std::string scatter_csv() const;
};

/// Registered check suites: geometry, groups, unitarize, split, interpolate.
std::vector<std::string> suite_names();
std::vector<std::string> check_ids(const std::string& suite = "");

/// Run all checks (or one named suite). Writes report files when configured.
SuiteReport run_suite(const ExperimentConfig& cfg,
                      const std::string& suite = "");

// ---------------------------------------------------------------------------
// Instance generation

CMatrix random_complex_matrix(int n, CounterRng& rng);
CMatrix random_hermitian(int n, CounterRng& rng);
/// Random Hermitian rescaled to the given operator norm.
CMatrix random_hermitian_scaled(int n, double op_norm, CounterRng& rng);
/// exp of a scaled random Hermitian: dist(id, result) = log_radius.
PosDefMatrix random_posdef(int n, double log_radius, CounterRng& rng);
UnitaryMatrix random_unitary(int n, CounterRng& rng);
/// Positive-times-unitary with the exact condition number.
InvertibleMatrix random_invertible(int n, double cond, CounterRng& rng);
/// Rank-r orthogonal projection from a random frame.
CMatrix random_projection(int n, int rank, CounterRng& rng);
/// Random positive matrix with the exact condition number and unit
/// determinant of extreme-value product (symmetric log spectrum).
PosDefMatrix random_posdef_cond(int n, double cond, CounterRng& rng);

/// Abstract table + images from the closure of a faithful matrix generator
/// set; images are the closure elements themselves.
Representation rep_from_group(const MatrixGroup& g, const Tolerances& tol = {});

Representation rep_cyclic_chars(int order, const std::vector<int>& exponents,
                                const Tolerances& tol = {});
Representation rep_dihedral(int n, int pad_chars = 0,
                            const Tolerances& tol = {});
Representation rep_quaternion(const Tolerances& tol = {});
/// Clock-and-shift group in dimension d (irreducible, order d^3).
Representation rep_clock_shift(int d, const Tolerances& tol = {});
/// Direct product with block-diagonal images (dim = dim(a) + dim(b)).
Representation rep_product_blocks(const Representation& a,
                                  const Representation& b,
                                  const Tolerances& tol = {});
/// Conjugate every image by the same invertible.
Representation rep_conjugate(const Representation& rep, const CMatrix& s);

struct RepSpec {
  enum class Family { Cyclic, CyclicRegular, Dihedral, Quaternion, ClockShift };
  Family family = Family::Cyclic;
  int order_param = 4;  // cyclic/dihedral order parameter, clock-shift dim
  int dim = 2;          // target dimension (where the family allows a plan)
};

/// Catalog-based uniformly bounded representation: a unitary representation
/// conjugated by a random positive matrix with the requested condition
/// number (cond 1 keeps it unitary). Homomorphism residual stays within
/// tol.group. Throws BadSpec for inconsistent parameters.
Representation gen_bounded_rep(const RepSpec& spec, double cond_target,
                               std::uint64_t seed, const Tolerances& tol = {});

}  // namespace conegeo
