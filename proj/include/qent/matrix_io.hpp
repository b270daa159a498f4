#pragma once

// JSON file formats shared by the CLI and anything that feeds it:
//   matrix: {"dim": n, "entries": [[re, im], ...]} row-major
//   state:  {"qubits": n, "amplitudes": [[re, im], ...]}
// Numbers are written with shortest round-trip formatting, so a
// write/read cycle reproduces every entry bit for bit.

#include <string>

#include "qent/linalg.hpp"
#include "qent/states.hpp"

namespace qent {

SquareMatrix read_matrix_json(const std::string& path);
void write_matrix_json(const SquareMatrix& m, const std::string& path);

PureState read_state_json(const std::string& path);

}  // namespace qent
