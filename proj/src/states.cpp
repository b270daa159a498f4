#include "qent/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qent {

namespace {

constexpr double kNormTol = 1e-6;
constexpr double kImpossible = 1e-12;

double norm_sq(std::span<const Complex> amps) {
  double n = 0.0;
  for (const Complex& z : amps) n += std::norm(z);
  return n;
}

int bit_position(const PureState& s, int qubit) {
  if (qubit < 1 || qubit > s.qubits()) {
    throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                " out of range for " +
                                std::to_string(s.qubits()) + " qubits");
  }
  return s.qubits() - qubit;  // qubit 1 is the most significant bit
}

void require_qubits(const PureState& s, int n, const char* what) {
  if (s.qubits() != n) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(n) + "-qubit state, got " +
                                std::to_string(s.qubits()));
  }
}

}  // namespace

PureState::PureState(int qubits, std::vector<Complex> amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
  if (qubits_ < 1) throw std::invalid_argument("PureState: qubits must be >= 1");
  const std::size_t want = std::size_t{1} << qubits_;
  if (amps_.size() != want) {
    throw std::invalid_argument("PureState: expected " + std::to_string(want) +
                                " amplitudes, got " +
                                std::to_string(amps_.size()));
  }
  for (const Complex& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("PureState: non-finite amplitude");
  }
  const double n = std::sqrt(norm_sq(amps_));
  if (n < kImpossible)
    throw std::invalid_argument("PureState: zero amplitude vector");
  if (std::abs(n - 1.0) > kNormTol) {
    throw std::invalid_argument("PureState: norm " + std::to_string(n) +
                                " is not within 1e-6 of 1");
  }
  for (Complex& z : amps_) z /= n;
}

DensityMatrix2::DensityMatrix2(SquareMatrix m) : m_(std::move(m)) {
  if (m_.dim() != 2) throw std::invalid_argument("DensityMatrix2: dim must be 2");
  if (max_abs_diff(m_, dagger(m_)) > 1e-10)
    throw std::invalid_argument("DensityMatrix2: not Hermitian within 1e-10");
  if (std::abs(trace(m_) - Complex(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("DensityMatrix2: trace not 1 within 1e-10");
  const auto [lo, hi] = eigenvalues();
  (void)lo;
  if (hi < -1e-10)
    throw std::invalid_argument("DensityMatrix2: negative eigenvalue");
}

std::pair<double, double> DensityMatrix2::eigenvalues() const {
  const double a = m_.at(0, 0).real();
  const double d = m_.at(1, 1).real();
  const double mid = 0.5 * (a + d);
  const double disc =
      std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m_.at(0, 1)));
  const auto clamp01 = [](double x) { return std::clamp(x, 0.0, 1.0); };
  return {clamp01(mid + disc), clamp01(mid - disc)};
}

QubitBasis computational_basis() {
  return {{Complex(1.0, 0.0), Complex(0.0, 0.0)},
          {Complex(0.0, 0.0), Complex(1.0, 0.0)}};
}

QubitBasis x_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{Complex(s, 0.0), Complex(s, 0.0)},
          {Complex(s, 0.0), Complex(-s, 0.0)}};
}

PureState make_state(int qubits, std::vector<Complex> amplitudes) {
  return PureState(qubits, std::move(amplitudes));
}

PureState catalog_state(std::string_view name, std::span<const double> params) {
  const double r2 = 1.0 / std::sqrt(2.0);
  if (name == "ghz") {
    std::vector<Complex> a(8, Complex(0.0, 0.0));
    a[0] = a[7] = r2;
    return PureState(3, std::move(a));
  }
  if (name == "w") {
    const double r3 = 1.0 / std::sqrt(3.0);
    std::vector<Complex> a(8, Complex(0.0, 0.0));
    a[1] = a[2] = a[4] = r3;  // |001>, |010>, |100>
    return PureState(3, std::move(a));
  }
  if (name == "phi") {
    std::vector<Complex> a(8, Complex(0.0, 0.0));
    a[0] = a[3] = a[5] = a[6] = 0.5;  // |000>, |011>, |101>, |110>
    return PureState(3, std::move(a));
  }
  if (name == "bell") {
    if (params.size() != 1)
      throw std::invalid_argument("bell: expected one parameter k in 0..3");
    const int k = static_cast<int>(params[0]);
    std::vector<Complex> a(4, Complex(0.0, 0.0));
    switch (k) {
      case 0: a[0] = r2; a[3] = r2; break;   // (|00> + |11>)/sqrt(2)
      case 1: a[0] = r2; a[3] = -r2; break;  // (|00> - |11>)/sqrt(2)
      case 2: a[1] = r2; a[2] = r2; break;   // (|01> + |10>)/sqrt(2)
      case 3: a[1] = r2; a[2] = -r2; break;  // (|01> - |10>)/sqrt(2)
      default:
        throw std::invalid_argument("bell: k must be in 0..3");
    }
    return PureState(2, std::move(a));
  }
  if (name == "xplus")
    return PureState(1, {Complex(r2, 0.0), Complex(r2, 0.0)});
  if (name == "xminus")
    return PureState(1, {Complex(r2, 0.0), Complex(-r2, 0.0)});
  if (name == "basis") {
    if (params.size() != 2)
      throw std::invalid_argument("basis: expected parameters n, k");
    const int n = static_cast<int>(params[0]);
    const long k = static_cast<long>(params[1]);
    if (n < 1 || n > 12) throw std::invalid_argument("basis: n must be 1..12");
    if (k < 0 || k >= (1L << n))
      throw std::invalid_argument("basis: k out of range for n qubits");
    std::vector<Complex> a(std::size_t{1} << n, Complex(0.0, 0.0));
    a[static_cast<std::size_t>(k)] = Complex(1.0, 0.0);
    return PureState(n, std::move(a));
  }
  std::string known;
  for (const auto& s : catalog_state_names()) known += " " + s;
  throw std::invalid_argument("unknown state '" + std::string(name) +
                              "'; catalog:" + known);
}

std::vector<std::string> catalog_state_names() {
  return {"ghz", "w", "phi", "bell", "xplus", "xminus", "basis"};
}

double concurrence_amps(std::span<const Complex> amps) {
  if (amps.size() != 4)
    throw std::invalid_argument("concurrence_amps: expected 4 amplitudes");
  return 2.0 * std::abs(amps[0] * amps[3] - amps[1] * amps[2]);
}

double concurrence(const PureState& s) {
  require_qubits(s, 2, "concurrence");
  return concurrence_amps(s.amplitudes());
}

double concurrence_sigma_y(const PureState& s) {
  require_qubits(s, 2, "concurrence_sigma_y");
  const SquareMatrix sigma_y(
      2, {Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, 1.0),
          Complex(0.0, 0.0)});
  const SquareMatrix yy = kron(sigma_y, sigma_y);
  Complex v(0.0, 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v += s.amp(i) * yy.at(i, j) * s.amp(j);
  return std::abs(v);
}

DensityMatrix2 reduced_density(const PureState& s, Subsystem keep) {
  require_qubits(s, 2, "reduced_density");
  SquareMatrix rho(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex sum(0.0, 0.0);
      for (int k = 0; k < 2; ++k) {
        // trace over the discarded qubit
        const int row = keep == Subsystem::A ? (i << 1) | k : (k << 1) | i;
        const int col = keep == Subsystem::A ? (j << 1) | k : (k << 1) | j;
        sum += s.amp(row) * std::conj(s.amp(col));
      }
      rho.at(i, j) = sum;
    }
  return DensityMatrix2(std::move(rho));
}

double linear_entropy(const DensityMatrix2& rho) {
  return 1.0 - trace(rho.matrix() * rho.matrix()).real();
}

double von_neumann_entropy(const DensityMatrix2& rho) {
  const auto [hi, lo] = rho.eigenvalues();
  const auto plogp = [](double p) { return p > 0.0 ? -p * std::log(p) : 0.0; };
  return plogp(hi) + plogp(lo);
}

std::pair<double, double> schmidt_lambdas(double c) {
  if (c < -1e-12 || c > 1.0 + 1e-12)
    throw std::invalid_argument("schmidt_lambdas: concurrence outside [0, 1]");
  const double cc = std::clamp(c, 0.0, 1.0);
  const double root = std::sqrt(std::max(0.0, 1.0 - cc * cc));
  return {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

PureState apply_gate(const PureState& s, const SquareMatrix& gate4,
                     int qubit_a, int qubit_b) {
  if (gate4.dim() != 4)
    throw std::invalid_argument("apply_gate: expected a 4x4 gate");
  if (!is_unitary(gate4, 1e-10))
    throw std::invalid_argument("apply_gate: gate not unitary within 1e-10");
  if (qubit_a == qubit_b)
    throw std::invalid_argument("apply_gate: target qubits must be distinct");
  const int pa = bit_position(s, qubit_a);
  const int pb = bit_position(s, qubit_b);
  const int sa = 1 << pa, sb = 1 << pb;
  std::vector<Complex> out(s.amplitudes().begin(), s.amplitudes().end());
  for (int x = 0; x < s.dim(); ++x) {
    if ((x & sa) || (x & sb)) continue;
    const int idx[4] = {x, x | sb, x | sa, x | sa | sb};  // rows |00>,|01>,|10>,|11>
    Complex v[4];
    for (int r = 0; r < 4; ++r) {
      v[r] = Complex(0.0, 0.0);
      for (int c = 0; c < 4; ++c) v[r] += gate4.at(r, c) * s.amp(idx[c]);
    }
    for (int r = 0; r < 4; ++r) out[static_cast<std::size_t>(idx[r])] = v[r];
  }
  return PureState(s.qubits(), std::move(out));
}

PureState apply_gate(const PureState& s, const SquareMatrix& gate2, int qubit) {
  if (gate2.dim() != 2)
    throw std::invalid_argument("apply_gate: expected a 2x2 gate");
  if (!is_unitary(gate2, 1e-10))
    throw std::invalid_argument("apply_gate: gate not unitary within 1e-10");
  const int p = bit_position(s, qubit);
  const int stride = 1 << p;
  std::vector<Complex> out(s.amplitudes().begin(), s.amplitudes().end());
  for (int x = 0; x < s.dim(); ++x) {
    if (x & stride) continue;
    const Complex a0 = s.amp(x), a1 = s.amp(x | stride);
    out[static_cast<std::size_t>(x)] = gate2.at(0, 0) * a0 + gate2.at(0, 1) * a1;
    out[static_cast<std::size_t>(x | stride)] =
        gate2.at(1, 0) * a0 + gate2.at(1, 1) * a1;
  }
  return PureState(s.qubits(), std::move(out));
}

std::array<MeasurementRecord, 2> measure_qubit(const PureState& s, int qubit,
                                               const QubitBasis& basis) {
  if (s.qubits() < 2)
    throw std::invalid_argument("measure_qubit: need at least 2 qubits");
  const auto ip = [](const std::array<Complex, 2>& u,
                     const std::array<Complex, 2>& v) {
    return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1];
  };
  if (std::abs(ip(basis.b0, basis.b0) - Complex(1.0, 0.0)) > 1e-10 ||
      std::abs(ip(basis.b1, basis.b1) - Complex(1.0, 0.0)) > 1e-10 ||
      std::abs(ip(basis.b0, basis.b1)) > 1e-10) {
    throw std::invalid_argument("measure_qubit: basis not orthonormal within 1e-10");
  }

  const int p = bit_position(s, qubit);
  const int low_mask = (1 << p) - 1;
  const int res_dim = s.dim() / 2;
  const auto full_index = [&](int v, int r) {
    return ((r & ~low_mask) << 1) | (v << p) | (r & low_mask);
  };

  std::array<std::vector<Complex>, 2> proj;
  std::array<double, 2> prob{};
  for (int o = 0; o < 2; ++o) {
    const std::array<Complex, 2>& b = o == 0 ? basis.b0 : basis.b1;
    proj[o].resize(static_cast<std::size_t>(res_dim));
    for (int r = 0; r < res_dim; ++r) {
      proj[o][static_cast<std::size_t>(r)] =
          std::conj(b[0]) * s.amp(full_index(0, r)) +
          std::conj(b[1]) * s.amp(full_index(1, r));
    }
    prob[o] = norm_sq(proj[o]);
  }

  const auto record = [&](int o) {
    const bool possible = prob[o] >= kImpossible;
    std::vector<Complex> residual;
    if (possible) {
      residual = proj[o];
      const double n = std::sqrt(prob[o]);
      for (Complex& z : residual) z /= n;
    } else {
      residual.assign(static_cast<std::size_t>(res_dim), Complex(0.0, 0.0));
      residual[0] = Complex(1.0, 0.0);
    }
    return MeasurementRecord{o, prob[o],
                             PureState(s.qubits() - 1, std::move(residual)),
                             possible};
  };
  return {record(0), record(1)};
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.qubits() != b.qubits())
    throw std::invalid_argument("inner_product: qubit count mismatch");
  Complex v(0.0, 0.0);
  for (int i = 0; i < a.dim(); ++i) v += std::conj(a.amp(i)) * b.amp(i);
  return v;
}

double fidelity(const PureState& a, const PureState& b) {
  return std::abs(inner_product(a, b));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<Complex> out(static_cast<std::size_t>(a.dim()) *
                           static_cast<std::size_t>(b.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      out[static_cast<std::size_t>(i * b.dim() + j)] = a.amp(i) * b.amp(j);
  return PureState(a.qubits() + b.qubits(), std::move(out));
}

}  // namespace qent
