#include "qent/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "qent/rng.hpp"

namespace qent {

namespace {

double cross(const Complex& a, const Complex& b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

double origin_segment_distance(const Complex& a, const Complex& b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 < 1e-300) return std::abs(a);
  const double t = std::clamp(
      -(a.real() * ab.real() + a.imag() * ab.imag()) / len2, 0.0, 1.0);
  return std::abs(a + t * ab);
}

bool origin_in_triangle(const Complex& a, const Complex& b, const Complex& c) {
  const double s = std::max(
      {1.0, std::abs(a), std::abs(b), std::abs(c)});
  // Degenerate triangles are covered by the segment distances.
  if (std::abs(cross(b - a, c - a)) <= 1e-14 * s * s) return false;
  const double d1 = cross(b - a, -a);
  const double d2 = cross(c - b, -b);
  const double d3 = cross(a - c, -c);
  const double eps = 1e-12 * s * s;
  const bool all_nonneg = d1 >= -eps && d2 >= -eps && d3 >= -eps;
  const bool all_nonpos = d1 <= eps && d2 <= eps && d3 <= eps;
  return all_nonneg || all_nonpos;
}

struct NelderMeadResult {
  double value;
  std::array<double, 6> point;
};

// Maximizes f over R^6. Stops when the simplex diameter (max infinity-norm
// distance to the best vertex) drops below diam_tol or after max_evals
// objective evaluations.
NelderMeadResult nelder_mead_max(
    const std::function<double(const std::array<double, 6>&)>& f,
    const std::array<double, 6>& start, double step, int max_evals,
    double diam_tol) {
  constexpr int kDim = 6;
  struct Vertex {
    std::array<double, 6> x;
    double g;  // minimized: g = -f
  };
  int evals = 0;
  const auto eval = [&](const std::array<double, 6>& x) {
    ++evals;
    return -f(x);
  };

  std::vector<Vertex> simplex;
  simplex.reserve(kDim + 1);
  simplex.push_back({start, eval(start)});
  for (int i = 0; i < kDim; ++i) {
    std::array<double, 6> x = start;
    x[static_cast<std::size_t>(i)] += step;
    simplex.push_back({x, eval(x)});
  }

  const auto by_value = [](const Vertex& a, const Vertex& b) {
    return a.g < b.g;
  };
  std::stable_sort(simplex.begin(), simplex.end(), by_value);

  while (evals < max_evals) {
    double diam = 0.0;
    for (int i = 1; i <= kDim; ++i)
      for (int k = 0; k < kDim; ++k)
        diam = std::max(diam, std::abs(simplex[static_cast<std::size_t>(i)]
                                           .x[static_cast<std::size_t>(k)] -
                                       simplex[0].x[static_cast<std::size_t>(k)]));
    if (diam < diam_tol) break;

    std::array<double, 6> centroid{};
    for (int i = 0; i < kDim; ++i)
      for (int k = 0; k < kDim; ++k)
        centroid[static_cast<std::size_t>(k)] +=
            simplex[static_cast<std::size_t>(i)].x[static_cast<std::size_t>(k)] /
            kDim;

    const Vertex& worst = simplex.back();
    const auto blend = [&](double coeff) {
      std::array<double, 6> x;
      for (int k = 0; k < kDim; ++k)
        x[static_cast<std::size_t>(k)] =
            centroid[static_cast<std::size_t>(k)] +
            coeff * (centroid[static_cast<std::size_t>(k)] -
                     worst.x[static_cast<std::size_t>(k)]);
      return x;
    };

    const std::array<double, 6> xr = blend(1.0);
    const double gr = eval(xr);
    if (gr < simplex[0].g) {
      const std::array<double, 6> xe = blend(2.0);
      const double ge = eval(xe);
      simplex.back() = ge < gr ? Vertex{xe, ge} : Vertex{xr, gr};
    } else if (gr < simplex[kDim - 1].g) {
      simplex.back() = {xr, gr};
    } else {
      const bool outside = gr < worst.g;
      const std::array<double, 6> xc = blend(outside ? 0.5 : -0.5);
      const double gc = eval(xc);
      if (gc < (outside ? gr : worst.g)) {
        simplex.back() = {xc, gc};
      } else {
        for (int i = 1; i <= kDim; ++i) {
          auto& v = simplex[static_cast<std::size_t>(i)];
          for (int k = 0; k < kDim; ++k)
            v.x[static_cast<std::size_t>(k)] =
                simplex[0].x[static_cast<std::size_t>(k)] +
                0.5 * (v.x[static_cast<std::size_t>(k)] -
                       simplex[0].x[static_cast<std::size_t>(k)]);
          v.g = eval(v.x);
        }
      }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
  }
  return {-simplex[0].g, simplex[0].x};
}

}  // namespace

const char* to_string(GateClass c) {
  switch (c) {
    case GateClass::Local:
      return "Local";
    case GateClass::PerfectEntangler:
      return "PerfectEntangler";
    case GateClass::NonPerfectNonLocal:
      return "NonPerfectNonLocal";
  }
  return "?";
}

double hull_origin_distance(std::span<const Complex> points) {
  if (points.empty())
    throw std::invalid_argument("hull_origin_distance: no points");
  if (points.size() > 4)
    throw std::invalid_argument("hull_origin_distance: at most 4 points");
  for (const Complex& p : points) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
      throw std::invalid_argument("hull_origin_distance: non-finite point");
  }
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (origin_in_triangle(points[i], points[j], points[k])) return 0.0;
  double best = std::abs(points[0]);
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, std::abs(points[i]));
    for (std::size_t j = i + 1; j < n; ++j)
      best = std::min(best, origin_segment_distance(points[i], points[j]));
  }
  return best;
}

bool hull_contains_zero(std::span<const Complex> points, double tol) {
  return hull_origin_distance(points) <= tol;
}

bool is_perfect_entangler(const Gate& u, double tol) {
  const std::array<Complex, 4> ev = eigenvalues4(m_matrix(u));
  return hull_contains_zero(ev, tol);
}

GateClass classify(const Gate& u, double tol) {
  const InvariantPair g = invariants(u);
  if (std::abs(g.g1 - Complex(1.0, 0.0)) <= tol &&
      std::abs(g.g2 - Complex(3.0, 0.0)) <= tol) {
    return GateClass::Local;
  }
  return is_perfect_entangler(u, tol) ? GateClass::PerfectEntangler
                                      : GateClass::NonPerfectNonLocal;
}

std::array<std::array<Complex, 4>, 4> ProductBasis::amplitudes() const {
  const auto bloch = [](double theta, double phi) {
    return std::array<Complex, 2>{
        Complex(std::cos(0.5 * theta), 0.0),
        std::polar(std::sin(0.5 * theta), phi)};
  };
  const auto flip = [](const std::array<Complex, 2>& v) {
    return std::array<Complex, 2>{std::conj(v[1]), -std::conj(v[0])};
  };
  const auto prod = [](const std::array<Complex, 2>& u,
                       const std::array<Complex, 2>& v) {
    return std::array<Complex, 4>{u[0] * v[0], u[0] * v[1], u[1] * v[0],
                                  u[1] * v[1]};
  };
  const auto ab = bloch(theta1, phi1);
  const auto cd = bloch(theta2, phi2);
  const auto ef = bloch(theta3, phi3);
  return {prod(ab, cd), prod(flip(ab), cd), prod(ef, flip(cd)),
          prod(flip(ef), flip(cd))};
}

std::array<PureState, 4> ProductBasis::states() const {
  const auto amps = amplitudes();
  const auto mk = [](const std::array<Complex, 4>& a) {
    return PureState(2, {a[0], a[1], a[2], a[3]});
  };
  return {mk(amps[0]), mk(amps[1]), mk(amps[2]), mk(amps[3])};
}

double basis_images_min_concurrence(const Gate& u, const ProductBasis& b) {
  const auto amps = b.amplitudes();
  double worst = 1.0;
  for (const auto& in : amps) {
    std::array<Complex, 4> out{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        out[static_cast<std::size_t>(r)] +=
            u.matrix.at(r, c) * in[static_cast<std::size_t>(c)];
    worst = std::min(worst, concurrence_amps(out));
  }
  return worst;
}

BasisSearchResult max_min_basis_search(const Gate& u, int restarts,
                                       std::uint64_t seed) {
  if (restarts < 1)
    throw std::invalid_argument("max_min_basis_search: restarts must be >= 1");
  const auto objective = [&](const std::array<double, 6>& x) {
    const ProductBasis b{x[0], x[1], x[2], x[3], x[4], x[5]};
    return basis_images_min_concurrence(u, b);
  };

  constexpr double kPi = 3.14159265358979323846;
  double best_value = -1.0;
  std::array<double, 6> best_point{};
  for (int k = 0; k < restarts; ++k) {
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(k));
    std::array<double, 6> x0;
    for (int p = 0; p < 3; ++p) {
      x0[static_cast<std::size_t>(2 * p)] = kPi * rng.next_double();
      x0[static_cast<std::size_t>(2 * p + 1)] = 2.0 * kPi * rng.next_double();
    }
    const NelderMeadResult coarse =
        nelder_mead_max(objective, x0, 0.6, 2000, 1e-8);
    // Fresh small simplex at the found optimum sharpens the last digits.
    const NelderMeadResult fine =
        nelder_mead_max(objective, coarse.point, 1e-3, 2000, 1e-8);
    const NelderMeadResult& r = fine.value > coarse.value ? fine : coarse;
    if (r.value > best_value) {
      best_value = r.value;
      best_point = r.point;
    }
  }
  return {best_value,
          ProductBasis{best_point[0], best_point[1], best_point[2],
                       best_point[3], best_point[4], best_point[5]}};
}

double sqrt_swap_identity_residual(Complex a, Complex b, Complex c, Complex d) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-9 ||
      std::abs(std::norm(c) + std::norm(d) - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "sqrt_swap_identity_residual: pairs must be normalized");
  }
  const double first = std::norm(a * d - b * c);
  const double second = std::norm(std::conj(a) * c + std::conj(b) * d);
  return std::abs(first + second - 1.0);
}

}  // namespace qent
