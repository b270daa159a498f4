#include "qent/gates.hpp"

#include <cmath>

namespace qent {

namespace {

const Complex kZero(0.0, 0.0);
const Complex kOne(1.0, 0.0);
const Complex kI(0.0, 1.0);

void require_unit_modulus(const Complex& z, const char* name) {
  if (std::abs(std::abs(z) - 1.0) > 1e-10) {
    throw std::invalid_argument(std::string("rprime: parameter ") + name +
                                " must have unit modulus");
  }
}

SquareMatrix rprime_matrix(Complex a, Complex b, Complex c, Complex d) {
  require_unit_modulus(a, "a");
  require_unit_modulus(b, "b");
  require_unit_modulus(c, "c");
  require_unit_modulus(d, "d");
  SquareMatrix m(4);
  m.at(0, 0) = a;
  m.at(1, 2) = b;
  m.at(2, 1) = c;
  m.at(3, 3) = d;
  return m;
}

SquareMatrix u_phi_matrix(double phi) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex em = std::polar(s, -phi);  // e^{-i phi} / sqrt(2)
  const Complex ep = std::polar(s, phi);   // e^{+i phi} / sqrt(2)
  SquareMatrix m(4);
  m.at(0, 0) = em;
  m.at(0, 3) = kI * em;
  m.at(1, 1) = ep;
  m.at(1, 2) = -kI * ep;
  m.at(2, 1) = -kI * ep;
  m.at(2, 2) = ep;
  m.at(3, 0) = kI * em;
  m.at(3, 3) = em;
  return m;
}

}  // namespace

Gate catalog_gate(std::string_view name, std::span<const Complex> params) {
  const auto no_params = [&](const char* who) {
    if (!params.empty())
      throw std::invalid_argument(std::string(who) + " takes no parameters");
  };
  if (name == "cnot") {
    no_params("cnot");
    SquareMatrix m(4);
    m.at(0, 0) = m.at(1, 1) = kOne;
    m.at(2, 3) = m.at(3, 2) = kOne;  // |10> <-> |11>
    return Gate{"cnot", {}, std::move(m)};
  }
  if (name == "swap") {
    no_params("swap");
    SquareMatrix m(4);
    m.at(0, 0) = m.at(3, 3) = kOne;
    m.at(1, 2) = m.at(2, 1) = kOne;
    return Gate{"swap", {}, std::move(m)};
  }
  if (name == "sqrt_swap") {
    no_params("sqrt_swap");
    // The square root of SWAP whose invariants are (i/4, 0).
    const Complex p(0.5, -0.5), q(0.5, 0.5);
    SquareMatrix m(4);
    m.at(0, 0) = m.at(3, 3) = kOne;
    m.at(1, 1) = m.at(2, 2) = p;
    m.at(1, 2) = m.at(2, 1) = q;
    return Gate{"sqrt_swap", {}, std::move(m)};
  }
  if (name == "r") {
    no_params("r");
    const double s = 1.0 / std::sqrt(2.0);
    SquareMatrix m(4, {Complex(s, 0.0),  kZero,           kZero,            Complex(s, 0.0),
                       kZero,            Complex(s, 0.0), Complex(-s, 0.0), kZero,
                       kZero,            Complex(s, 0.0), Complex(s, 0.0),  kZero,
                       Complex(-s, 0.0), kZero,           kZero,            Complex(s, 0.0)});
    return Gate{"r", {}, std::move(m)};
  }
  if (name == "rprime") {
    if (params.size() != 4)
      throw std::invalid_argument("rprime: expected parameters a,b,c,d");
    return Gate{"rprime",
                {params[0], params[1], params[2], params[3]},
                rprime_matrix(params[0], params[1], params[2], params[3])};
  }
  if (name == "rprime0") {
    no_params("rprime0");
    return Gate{"rprime0", {}, rprime_matrix(kOne, kOne, -kOne, kOne)};
  }
  if (name == "u_phi") {
    if (params.size() != 1 || std::abs(params[0].imag()) > 1e-12)
      throw std::invalid_argument("u_phi: expected one real parameter phi");
    const double phi = params[0].real();
    return Gate{"u_phi", {params[0]}, u_phi_matrix(phi)};
  }
  if (name == "controlled") {
    if (params.size() != 4)
      throw std::invalid_argument(
          "controlled: expected the 2x2 target unitary as 4 row-major values");
    SquareMatrix v(2, {params[0], params[1], params[2], params[3]});
    return controlled_gate(v);
  }
  if (name == "identity") {
    no_params("identity");
    return Gate{"identity", {}, SquareMatrix::identity(4)};
  }
  std::string known;
  for (const auto& s : catalog_gate_names()) known += " " + s;
  throw std::invalid_argument("unknown gate '" + std::string(name) +
                              "'; catalog:" + known);
}

std::vector<std::string> catalog_gate_names() {
  return {"cnot",    "swap",  "sqrt_swap",  "r",       "rprime",
          "rprime0", "u_phi", "controlled", "identity"};
}

Gate gate_from_matrix(std::string name, SquareMatrix m, double tol) {
  if (m.dim() != 4)
    throw std::invalid_argument("gate matrix must be 4x4, got dim " +
                                std::to_string(m.dim()));
  if (!is_unitary(m, tol)) {
    throw std::invalid_argument("gate '" + name + "' is not unitary within " +
                                std::to_string(tol));
  }
  return Gate{std::move(name), {}, std::move(m)};
}

Gate controlled_gate(const SquareMatrix& v2x2) {
  if (v2x2.dim() != 2)
    throw std::invalid_argument("controlled_gate: target must be 2x2");
  if (!is_unitary(v2x2, 1e-10))
    throw std::invalid_argument("controlled_gate: target not unitary");
  SquareMatrix m(4);
  m.at(0, 0) = m.at(1, 1) = kOne;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(2 + i, 2 + j) = v2x2.at(i, j);
  std::vector<Complex> params(v2x2.entries().begin(), v2x2.entries().end());
  return Gate{"controlled", std::move(params), std::move(m)};
}

SquareMatrix q_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex is(0.0, s);
  return SquareMatrix(
      4, {Complex(s, 0.0), kZero, kZero,            is,
          kZero,           is,    Complex(s, 0.0),  kZero,
          kZero,           is,    Complex(-s, 0.0), kZero,
          Complex(s, 0.0), kZero, kZero,            -is});
}

SquareMatrix m_matrix(const Gate& u) {
  const SquareMatrix q = q_matrix();
  const SquareMatrix a = dagger(q) * u.matrix * q;
  return transpose(a) * a;
}

InvariantPair invariants(const Gate& u) {
  const SquareMatrix m = m_matrix(u);
  const Complex t = trace(m);
  const Complex t2 = trace(m * m);
  const Complex det = determinant(u.matrix);
  return {t * t / (16.0 * det), (t * t - t2) / (4.0 * det)};
}

InvariantPair invariants_rprime_closed_form(Complex a, Complex b, Complex c,
                                            Complex d) {
  require_unit_modulus(a, "a");
  require_unit_modulus(b, "b");
  require_unit_modulus(c, "c");
  require_unit_modulus(d, "d");
  const Complex delta = (a * d) / (b * c);
  const Complex g1 = -(kOne + delta) * (kOne + delta) / (4.0 * delta);
  return {g1, 2.0 * g1 - kOne};
}

InvariantPair invariants_u_phi(double phi) {
  return {kZero, Complex(std::cos(4.0 * phi), 0.0)};
}

bool locally_equivalent(const Gate& u, const Gate& v, double tol) {
  const InvariantPair a = invariants(u);
  const InvariantPair b = invariants(v);
  return std::abs(a.g1 - b.g1) <= tol && std::abs(a.g2 - b.g2) <= tol;
}

double controlled_relation_residual(const SquareMatrix& v2x2) {
  const InvariantPair g = invariants(controlled_gate(v2x2));
  return std::abs(g.g2 - kOne - 2.0 * g.g1);
}

SquareMatrix hadamard2() {
  const double s = 1.0 / std::sqrt(2.0);
  return SquareMatrix(2, {Complex(s, 0.0), Complex(s, 0.0), Complex(s, 0.0),
                          Complex(-s, 0.0)});
}

SquareMatrix pauli_x() {
  return SquareMatrix(2, {kZero, kOne, kOne, kZero});
}

SquareMatrix pauli_y() {
  return SquareMatrix(2, {kZero, -kI, kI, kZero});
}

SquareMatrix pauli_z() {
  return SquareMatrix(2, {kOne, kZero, kZero, -kOne});
}

}  // namespace qent
