#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qent/epower.hpp"
#include "support.hpp"

using namespace qent;
using test::random_unitary;

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kTwoNinths = 2.0 / 9.0;

Gate rprime_from_delta_angle(double angle) {
  const Complex one(1.0, 0.0);
  return catalog_gate("rprime",
                      std::vector<Complex>{std::polar(1.0, angle), one, one, one});
}

}  // namespace

TEST_CASE("quadrature reproduces the closed forms at default nodes") {
  CHECK(std::abs(entangling_power_quadrature(catalog_gate("cnot")).value -
                 kTwoNinths) < 1e-9);
  CHECK(std::abs(entangling_power_quadrature(catalog_gate("r")).value -
                 kTwoNinths) < 1e-9);
  CHECK(std::abs(entangling_power_quadrature(catalog_gate("rprime0")).value -
                 kTwoNinths) < 1e-9);
  const Gate uphi = catalog_gate("u_phi", std::vector<Complex>{Complex(0.3, 0.0)});
  CHECK(std::abs(entangling_power_quadrature(uphi).value - kTwoNinths) < 1e-9);
  CHECK(std::abs(entangling_power_quadrature(catalog_gate("sqrt_swap")).value -
                 1.0 / 6.0) < 1e-9);
  CHECK(std::abs(entangling_power_quadrature(catalog_gate("swap")).value) <
        1e-12);
  CHECK(std::abs(entangling_power_quadrature(catalog_gate("identity")).value) <
        1e-12);
}

TEST_CASE("quadrature matches |1 - delta|^2 / 18 across the rprime family") {
  SplitMix64 rng(0xde17a);
  for (int trial = 0; trial < 10; ++trial) {
    const double angle = 2.0 * kPi * rng.next_double();
    const Gate g = rprime_from_delta_angle(angle);
    const double want =
        std::norm(Complex(1.0, 0.0) - std::polar(1.0, angle)) / 18.0;
    CHECK(std::abs(entangling_power_quadrature(g).value - want) < 1e-9);
  }
}

TEST_CASE("quadrature node minimums are enforced") {
  CHECK_THROWS_AS(entangling_power_quadrature(catalog_gate("cnot"), 4, 32),
                  std::invalid_argument);
  CHECK_THROWS_AS(entangling_power_quadrature(catalog_gate("cnot"), 16, 8),
                  std::invalid_argument);
  // more nodes than the defaults changes nothing (the rule is already exact)
  const double coarse = entangling_power_quadrature(catalog_gate("cnot")).value;
  const double fine =
      entangling_power_quadrature(catalog_gate("cnot"), 24, 48).value;
  CHECK(std::abs(coarse - fine) < 1e-12);
}

TEST_CASE("monte carlo agrees with the closed forms within 3 standard errors") {
  const std::int64_t n = 200000;
  const std::uint64_t seed = 42;

  const EPowerEstimate cnot = entangling_power_mc(catalog_gate("cnot"), n, seed);
  REQUIRE(cnot.stderr_est.has_value());
  CHECK(std::abs(cnot.value - kTwoNinths) <= 3.0 * *cnot.stderr_est);

  const EPowerEstimate ss =
      entangling_power_mc(catalog_gate("sqrt_swap"), n, seed);
  CHECK(std::abs(ss.value - 1.0 / 6.0) <= 3.0 * *ss.stderr_est);

  const Gate rp = rprime_from_delta_angle(2.2);
  const double rp_want = std::norm(Complex(1.0, 0.0) - std::polar(1.0, 2.2)) / 18.0;
  const EPowerEstimate rp_est = entangling_power_mc(rp, n, seed);
  CHECK(std::abs(rp_est.value - rp_want) <= 3.0 * *rp_est.stderr_est);

  // identity maps every sample to a product state: exactly zero either way
  const EPowerEstimate id = entangling_power_mc(catalog_gate("identity"), 1000, 1);
  CHECK(id.value == 0.0);
  CHECK(*id.stderr_est == 0.0);

  CHECK_THROWS_AS(entangling_power_mc(catalog_gate("cnot"), 999, seed),
                  std::invalid_argument);
}

TEST_CASE("monte carlo is reproducible for a fixed seed") {
  const EPowerEstimate a = entangling_power_mc(catalog_gate("r"), 50000, 1234);
  const EPowerEstimate b = entangling_power_mc(catalog_gate("r"), 50000, 1234);
  CHECK(a.value == b.value);
  CHECK(*a.stderr_est == *b.stderr_est);
  const EPowerEstimate c = entangling_power_mc(catalog_gate("r"), 50000, 1235);
  CHECK(a.value != c.value);
}

TEST_CASE("closed forms") {
  CHECK(entangling_power_closed_form("cnot").value == kTwoNinths);
  CHECK(entangling_power_closed_form("r").value == kTwoNinths);
  CHECK(entangling_power_closed_form("rprime0").value == kTwoNinths);
  CHECK(entangling_power_closed_form("u_phi").value == kTwoNinths);
  CHECK(entangling_power_closed_form("sqrt_swap").value == 1.0 / 6.0);
  CHECK(entangling_power_closed_form("swap").value == 0.0);

  // rprime at delta = -1 coincides with rprime0
  const Complex one(1.0, 0.0);
  const std::vector<Complex> r0_params{one, one, one, -one};
  CHECK(entangling_power_closed_form("rprime", r0_params).value ==
        doctest::Approx(kTwoNinths).epsilon(1e-15));

  CHECK_THROWS_WITH_AS(entangling_power_closed_form("mystery"),
                       doctest::Contains("quadrature"), std::invalid_argument);
  CHECK_THROWS_AS(entangling_power_closed_form("rprime"), std::invalid_argument);
}

TEST_CASE("entangling power is invariant under swap and local composition") {
  SplitMix64 rng(0x1ab);
  const SquareMatrix swap = catalog_gate("swap").matrix;
  for (int trial = 0; trial < 4; ++trial) {
    const SquareMatrix u = random_unitary(4, rng);
    const double base =
        entangling_power_quadrature(gate_from_matrix("u", u)).value;
    CHECK(std::abs(entangling_power_quadrature(gate_from_matrix("us", u * swap))
                       .value -
                   base) < 1e-9);
    CHECK(std::abs(entangling_power_quadrature(gate_from_matrix("su", swap * u))
                       .value -
                   base) < 1e-9);
    const SquareMatrix dressed = kron(random_unitary(2, rng),
                                      random_unitary(2, rng)) *
                                 u *
                                 kron(random_unitary(2, rng),
                                      random_unitary(2, rng));
    CHECK(std::abs(
              entangling_power_quadrature(gate_from_matrix("d", dressed)).value -
              base) < 1e-9);
  }
}

TEST_CASE("estimates stay inside the linear-entropy range") {
  SplitMix64 rng(0x0e0);
  for (int trial = 0; trial < 6; ++trial) {
    const Gate u = gate_from_matrix("u", random_unitary(4, rng));
    const double q = entangling_power_quadrature(u).value;
    CHECK(q >= 0.0);
    CHECK(q <= 0.5);
  }
  // the square root of swap entangles strictly less than cnot
  CHECK(entangling_power_quadrature(catalog_gate("sqrt_swap")).value <
        entangling_power_quadrature(catalog_gate("cnot")).value);
}
