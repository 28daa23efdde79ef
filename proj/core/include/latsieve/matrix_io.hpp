#pragma once

#include <string>

#include "latsieve/linalg.hpp"

namespace latsieve {

/// Serializes a basis in the bracketed row format used across lattice
/// tooling:
///   [[1 2 3]
///    [4 5 6]]
std::string format_matrix(const IntMat& m);

/// Parses either the bracketed format above or bare whitespace-separated
/// rows (one row per line). Throws std::invalid_argument on malformed
/// input (jagged rows, stray tokens, empty matrix).
IntMat parse_matrix(const std::string& text);

IntMat read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const IntMat& m);

}  // namespace latsieve
