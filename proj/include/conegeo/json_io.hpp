#pragma once

// Project-wide JSON formats. Matrices: {"dim": n, "entries": [[[re,im],...]]}
// row-major; readers reject ragged rows. Groups: {"dim": n, "generators":
// [matrix, ...]}.

#include <string>
#include <vector>

#include "conegeo/types.hpp"

namespace conegeo {

std::string matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const std::string& text);
void write_matrix_file(const std::string& path, const CMatrix& m);
CMatrix read_matrix_file(const std::string& path);

std::string group_to_json(const std::vector<CMatrix>& generators);
std::vector<CMatrix> group_from_json(const std::string& text);
void write_group_file(const std::string& path,
                      const std::vector<CMatrix>& generators);
std::vector<CMatrix> read_group_file(const std::string& path);

}  // namespace conegeo
