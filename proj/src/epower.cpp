#include "qent/epower.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qent/rng.hpp"
#include "qent/states.hpp"

namespace qent {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(n - 1 - k)] = x;
    weights[static_cast<std::size_t>(n - 1 - k)] =
        2.0 / ((1.0 - x * x) * dp * dp);
  }
}

struct BlochAmps {
  Complex a0;
  Complex a1;
};

// (cos(theta/2) e^{-i phi/2}, sin(theta/2) e^{i phi/2}) with u = cos(theta).
BlochAmps bloch_amps(double u, double phi) {
  const double c = std::sqrt(0.5 * (1.0 + u));
  const double s = std::sqrt(0.5 * (1.0 - u));
  return {std::polar(c, -0.5 * phi), std::polar(s, 0.5 * phi)};
}

// C^2/2 of the gate applied to the product of two Bloch states. Concurrences
// below the roundoff floor of the determinant cancellation are flushed to
// exact zero; they contribute < 1e-30 to any average.
double half_c2(const SquareMatrix& gate, const BlochAmps& p,
               const BlochAmps& q) {
  const Complex in[4] = {p.a0 * q.a0, p.a0 * q.a1, p.a1 * q.a0, p.a1 * q.a1};
  Complex out[4];
  for (int r = 0; r < 4; ++r) {
    out[r] = Complex(0.0, 0.0);
    for (int c = 0; c < 4; ++c) out[r] += gate.at(r, c) * in[c];
  }
  double con = 2.0 * std::abs(out[0] * out[3] - out[1] * out[2]);
  if (con < 1e-15) con = 0.0;
  return 0.5 * con * con;
}

}  // namespace

const char* to_string(EPowerMethod m) {
  switch (m) {
    case EPowerMethod::Quadrature:
      return "quadrature";
    case EPowerMethod::MonteCarlo:
      return "monte-carlo";
    case EPowerMethod::ClosedForm:
      return "closed-form";
  }
  return "?";
}

EPowerEstimate entangling_power_quadrature(const Gate& u, int n_theta,
                                           int n_phi) {
  if (n_theta < 8)
    throw std::invalid_argument("entangling_power_quadrature: n_theta >= 8");
  if (n_phi < 16)
    throw std::invalid_argument("entangling_power_quadrature: n_phi >= 16");

  std::vector<double> gx, gw;
  gauss_legendre(n_theta, gx, gw);
  const double wphi = 2.0 * kPi / n_phi;

  // One-qubit node table shared by both factors.
  std::vector<BlochAmps> amps;
  std::vector<double> weights;
  amps.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  weights.reserve(amps.capacity());
  for (int it = 0; it < n_theta; ++it) {
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = 2.0 * kPi * ip / n_phi;
      amps.push_back(bloch_amps(gx[static_cast<std::size_t>(it)], phi));
      weights.push_back(gw[static_cast<std::size_t>(it)] * wphi);
    }
  }

  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < amps.size(); ++j)
      row += weights[j] * half_c2(u.matrix, amps[i], amps[j]);
    total += weights[i] * row;
  }
  const double norm = 1.0 / (16.0 * kPi * kPi);
  const std::int64_t nodes =
      static_cast<std::int64_t>(amps.size()) * static_cast<std::int64_t>(amps.size());
  return {total * norm, EPowerMethod::Quadrature, std::nullopt, nodes};
}

EPowerEstimate entangling_power_mc(const Gate& u, std::int64_t samples,
                                   std::uint64_t seed) {
  if (samples < 1000)
    throw std::invalid_argument("entangling_power_mc: samples must be >= 1000");
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(i));
    const double u1 = 2.0 * rng.next_double() - 1.0;
    const double f1 = 2.0 * kPi * rng.next_double();
    const double u2 = 2.0 * rng.next_double() - 1.0;
    const double f2 = 2.0 * kPi * rng.next_double();
    const double v = half_c2(u.matrix, bloch_amps(u1, f1), bloch_amps(u2, f2));
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  const double se = std::sqrt(var / (n - 1.0));
  return {mean, EPowerMethod::MonteCarlo, se, samples};
}

EPowerEstimate entangling_power_closed_form(std::string_view name,
                                            std::span<const Complex> params) {
  const auto value = [&]() -> double {
    if (name == "cnot" || name == "r" || name == "rprime0") return 2.0 / 9.0;
    if (name == "u_phi") return 2.0 / 9.0;  // independent of phi
    if (name == "sqrt_swap") return 1.0 / 6.0;
    if (name == "swap") return 0.0;
    if (name == "rprime") {
      if (params.size() != 4)
        throw std::invalid_argument("rprime: expected parameters a,b,c,d");
      for (const Complex& p : params) {
        if (std::abs(std::abs(p) - 1.0) > 1e-10)
          throw std::invalid_argument("rprime: parameters must have unit modulus");
      }
      const Complex delta = (params[0] * params[3]) / (params[1] * params[2]);
      return std::norm(Complex(1.0, 0.0) - delta) / 18.0;
    }
    throw std::invalid_argument("no closed-form entangling power for '" +
                                std::string(name) +
                                "'; use the quadrature method");
  }();
  return {value, EPowerMethod::ClosedForm, std::nullopt, 0};
}

}  // namespace qent
