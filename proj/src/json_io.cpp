#include "conegeo/json_io.hpp"

#include <fstream>

#include "json.hpp"

namespace conegeo {

using nlohmann::json;

namespace {

json matrix_to_json_obj(const CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

CMatrix matrix_from_json_obj(const json& j, const std::string& context) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw IoError(context + ": expected {\"dim\":n,\"entries\":[...]}");
  const int n = j.at("dim").get<int>();
  if (n <= 0) throw IoError(context + ": dim must be positive");
  const json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw IoError(context + ": entries must hold " + std::to_string(n) +
                  " rows");
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw IoError(context + ": ragged row " + std::to_string(i));
    for (int k = 0; k < n; ++k) {
      const json& cell = row.at(k);
      if (!cell.is_array() || cell.size() != 2)
        throw IoError(context + ": entry must be [re,im] at row " +
                      std::to_string(i));
      m(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return m;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

std::string matrix_to_json(const CMatrix& m) {
  return matrix_to_json_obj(m).dump();
}

CMatrix matrix_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("cannot parse matrix JSON: ") + e.what());
  }
  return matrix_from_json_obj(j, "matrix");
}

void write_matrix_file(const std::string& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << matrix_to_json_obj(m).dump(2) << "\n";
}

CMatrix read_matrix_file(const std::string& path) {
  return matrix_from_json_obj(parse_file(path), path);
}

std::string group_to_json(const std::vector<CMatrix>& generators) {
  if (generators.empty()) throw IoError("group needs at least one generator");
  json gens = json::array();
  for (const auto& g : generators) gens.push_back(matrix_to_json_obj(g));
  return json{{"dim", generators.front().rows()},
              {"generators", std::move(gens)}}
      .dump();
}

std::vector<CMatrix> group_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("cannot parse group JSON: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("generators"))
    throw IoError("group JSON: expected {\"dim\":n,\"generators\":[...]}");
  const int n = j.at("dim").get<int>();
  std::vector<CMatrix> gens;
  for (const auto& g : j.at("generators")) {
    CMatrix m = matrix_from_json_obj(g, "generator");
    if (m.rows() != n) throw IoError("group JSON: generator dim mismatch");
    gens.push_back(std::move(m));
  }
  if (gens.empty()) throw IoError("group JSON: no generators");
  return gens;
}

void write_group_file(const std::string& path,
                      const std::vector<CMatrix>& generators) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << json::parse(group_to_json(generators)).dump(2) << "\n";
}

std::vector<CMatrix> read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return group_from_json(text);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace conegeo
