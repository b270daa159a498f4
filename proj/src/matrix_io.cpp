#include "qent/matrix_io.hpp"

#include <fstream>

#include "json.hpp"

namespace qent {

namespace {

using nlohmann::json;

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("failed to parse '" + path + "': " + e.what());
  }
  return doc;
}

std::vector<Complex> parse_pairs(const json& arr, const char* what) {
  if (!arr.is_array())
    throw std::runtime_error(std::string(what) + " must be an array");
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const json& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
        !item[1].is_number()) {
      throw std::runtime_error(std::string(what) +
                               " entries must be [re, im] pairs");
    }
    out.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  return out;
}

}  // namespace

SquareMatrix read_matrix_json(const std::string& path) {
  const json doc = load_file(path);
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw std::runtime_error("matrix file '" + path + "' needs integer 'dim'");
  const int dim = doc["dim"].get<int>();
  if (!doc.contains("entries"))
    throw std::runtime_error("matrix file '" + path + "' needs 'entries'");
  return SquareMatrix(dim, parse_pairs(doc["entries"], "entries"));
}

void write_matrix_json(const SquareMatrix& m, const std::string& path) {
  json entries = json::array();
  for (const Complex& z : m.entries())
    entries.push_back(json::array({z.real(), z.imag()}));
  json doc;
  doc["dim"] = m.dim();
  doc["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

PureState read_state_json(const std::string& path) {
  const json doc = load_file(path);
  if (!doc.contains("qubits") || !doc["qubits"].is_number_integer())
    throw std::runtime_error("state file '" + path + "' needs integer 'qubits'");
  if (!doc.contains("amplitudes"))
    throw std::runtime_error("state file '" + path + "' needs 'amplitudes'");
  return PureState(doc["qubits"].get<int>(),
                   parse_pairs(doc["amplitudes"], "amplitudes"));
}

}  // namespace qent
