#pragma once

// Entangling power e_p(U): the average linear entropy C^2/2 of U applied to
// independent Bloch-uniform product states, by deterministic product
// quadrature, seeded Monte Carlo, or closed form.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "qent/gates.hpp"

namespace qent {

enum class EPowerMethod { Quadrature, MonteCarlo, ClosedForm };
const char* to_string(EPowerMethod m);

struct EPowerEstimate {
  double value;                      // in [0, 1/2]
  EPowerMethod method;
  std::optional<double> stderr_est;  // present only for Monte Carlo
  std::int64_t nodes_or_samples;
};

// Gauss-Legendre in cos(theta) and cos(theta') (n_theta nodes each, min 8)
// times a uniform periodic grid in phi and phi' (n_phi nodes each, min 16).
// The integrand is a trigonometric polynomial of low degree, so the defaults
// are exact up to roundoff.
EPowerEstimate entangling_power_quadrature(const Gate& u, int n_theta = 16,
                                           int n_phi = 32);

// cos(theta) uniform on [-1, 1], phi uniform on [0, 2pi), independent per
// qubit. Sample i draws (cos theta, phi, cos theta', phi') in that order from
// SplitMix64::substream(seed, i); the mean is accumulated in sample order.
EPowerEstimate entangling_power_mc(const Gate& u, std::int64_t samples,
                                   std::uint64_t seed);

// Exact values: cnot, r, rprime0, u_phi -> 2/9; sqrt_swap -> 1/6; swap -> 0;
// rprime(a,b,c,d) -> |1 - ad/(bc)|^2 / 18. Anything else: error pointing at
// the quadrature method.
EPowerEstimate entangling_power_closed_form(std::string_view name,
                                            std::span<const Complex> params = {});

}  // namespace qent
