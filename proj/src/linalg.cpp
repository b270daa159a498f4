#include "qent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace qent {

namespace {

void require_finite(const Complex& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument(std::string(what) +
                                ": non-finite entry rejected");
  }
}

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b,
                      const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
}

Complex det2(const Complex& a, const Complex& b, const Complex& c,
             const Complex& d) {
  return a * d - b * c;
}

Complex det3(const SquareMatrix& m, int r0, int r1, int r2, int c0, int c1,
             int c2) {
  return m.at(r0, c0) * det2(m.at(r1, c1), m.at(r1, c2), m.at(r2, c1),
                             m.at(r2, c2)) -
         m.at(r0, c1) * det2(m.at(r1, c0), m.at(r1, c2), m.at(r2, c0),
                             m.at(r2, c2)) +
         m.at(r0, c2) * det2(m.at(r1, c0), m.at(r1, c1), m.at(r2, c0),
                             m.at(r2, c1));
}

Complex det4_cofactor(const SquareMatrix& m) {
  Complex d(0.0, 0.0);
  const int cols[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  double sign = 1.0;
  for (int c = 0; c < 4; ++c) {
    d += sign * m.at(0, c) *
         det3(m, 1, 2, 3, cols[c][0], cols[c][1], cols[c][2]);
    sign = -sign;
  }
  return d;
}

Complex det_lu(SquareMatrix m) {
  const int n = m.dim();
  Complex det(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    double best = std::abs(m.at(k, k));
    for (int r = k + 1; r < n; ++r) {
      double v = std::abs(m.at(r, k));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return Complex(0.0, 0.0);
    if (pivot != k) {
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
      det = -det;
    }
    det *= m.at(k, k);
    for (int r = k + 1; r < n; ++r) {
      Complex f = m.at(r, k) / m.at(k, k);
      for (int c = k; c < n; ++c) m.at(r, c) -= f * m.at(k, c);
    }
  }
  return det;
}

}  // namespace

NumericalError::NumericalError(const std::string& msg,
                               std::vector<double> residuals)
    : std::runtime_error(msg), residuals_(std::move(residuals)) {}

SquareMatrix::SquareMatrix(int dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("SquareMatrix: dim must be >= 1");
  entries_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

SquareMatrix::SquareMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim <= 0) throw std::invalid_argument("SquareMatrix: dim must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
    throw std::invalid_argument(
        "SquareMatrix: expected " + std::to_string(dim * dim) +
        " entries, got " + std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) require_finite(z, "SquareMatrix");
}

SquareMatrix SquareMatrix::identity(int dim) {
  SquareMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

std::size_t SquareMatrix::index(int r, int c) const {
  if (r < 0 || r >= dim_ || c < 0 || c >= dim_) {
    throw std::out_of_range("SquareMatrix: index (" + std::to_string(r) +
                            ", " + std::to_string(c) + ") out of range for dim " +
                            std::to_string(dim_));
  }
  return static_cast<std::size_t>(r) * dim_ + c;
}

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "matmul");
  const int n = a.dim();
  SquareMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  return matmul(a, b);
}

SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  SquareMatrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Complex aij = a.at(i, j);
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l)
          out.at(i * nb + k, j * nb + l) = aij * b.at(k, l);
    }
  return out;
}

SquareMatrix dagger(const SquareMatrix& a) {
  const int n = a.dim();
  SquareMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = std::conj(a.at(j, i));
  return out;
}

SquareMatrix transpose(const SquareMatrix& a) {
  const int n = a.dim();
  SquareMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = a.at(j, i);
  return out;
}

SquareMatrix add(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "add");
  SquareMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

SquareMatrix sub(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "sub");
  SquareMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

SquareMatrix scale(const SquareMatrix& a, Complex factor) {
  require_finite(factor, "scale");
  SquareMatrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.at(i, j) = factor * a.at(i, j);
  return out;
}

Complex trace(const SquareMatrix& a) {
  Complex t(0.0, 0.0);
  for (int i = 0; i < a.dim(); ++i) t += a.at(i, i);
  return t;
}

Complex determinant(const SquareMatrix& a) {
  switch (a.dim()) {
    case 1:
      return a.at(0, 0);
    case 2:
      return det2(a.at(0, 0), a.at(0, 1), a.at(1, 0), a.at(1, 1));
    case 4:
      return det4_cofactor(a);
    default:
      if (a.dim() > 8) {
        throw std::invalid_argument("determinant: dim " +
                                    std::to_string(a.dim()) +
                                    " unsupported (max 8)");
      }
      return det_lu(a);
  }
}

std::array<Complex, 4> eigenvalues4(const SquareMatrix& a) {
  if (a.dim() != 4) {
    throw std::invalid_argument("eigenvalues4: dim must be 4, got " +
                                std::to_string(a.dim()));
  }

  // Characteristic polynomial p(z) = z^4 - e1 z^3 + e2 z^2 - e3 z + e4
  // via Newton's identities on the power sums p_k = tr(A^k).
  const SquareMatrix a2 = a * a;
  const SquareMatrix a3 = a2 * a;
  const Complex p1 = trace(a);
  const Complex p2 = trace(a2);
  const Complex p3 = trace(a3);
  const Complex p4 = trace(a3 * a);
  const Complex e1 = p1;
  const Complex e2 = (e1 * p1 - p2) / 2.0;
  const Complex e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
  const Complex e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0;

  const auto poly = [&](Complex z) {
    return (((z - e1) * z + e2) * z - e3) * z + e4;
  };
  const auto dpoly = [&](Complex z) {
    return ((4.0 * z - 3.0 * e1) * z + 2.0 * e2) * z - e3;
  };
  // Horner-evaluation magnitude of p at z; the floating-point noise floor of
  // poly(z) is a small multiple of eps times this.
  const auto poly_scale = [&](Complex z) {
    const double m = std::abs(z);
    return 1.0 + (((m + std::abs(e1)) * m + std::abs(e2)) * m + std::abs(e3)) *
                     m + std::abs(e4);
  };

  // Cauchy bound: every root satisfies |z| <= 1 + max |coefficient|.
  const double bound =
      1.0 + std::max({std::abs(e1), std::abs(e2), std::abs(e3), std::abs(e4)});

  // Durand-Kerner with asymmetric starting points.
  std::array<Complex, 4> z;
  Complex acc(1.0, 0.0);
  const Complex w(0.4, 0.9);
  for (auto& zi : z) {
    zi = bound * acc;
    acc *= w;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < 4; ++i) {
      Complex denom(1.0, 0.0);
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (std::abs(denom) < 1e-300) {
        z[i] += Complex(1e-8 * bound, 1e-8 * bound);
        max_step = std::max(max_step, 1e-8 * bound);
        continue;
      }
      const Complex step = poly(z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step <= 1e-15 * bound) break;
  }

  // Replace clusters of approximations by their centroid, gated on the
  // centroid still being an excellent root; merging never proceeds past a
  // pair whose midpoint fails the gate, so well-separated roots stay intact.
  struct Cluster {
    Complex centroid;
    int count;
  };
  std::vector<Cluster> clusters;
  for (const Complex& zi : z) clusters.push_back({zi, 1});
  const double merge_radius = 0.02 * bound;
  while (clusters.size() > 1) {
    std::size_t bi = 0, bj = 1;
    double best = std::abs(clusters[0].centroid - clusters[1].centroid);
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const double d = std::abs(clusters[i].centroid - clusters[j].centroid);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    if (best > merge_radius) break;
    const int ni = clusters[bi].count, nj = clusters[bj].count;
    const Complex merged =
        (clusters[bi].centroid * static_cast<double>(ni) +
         clusters[bj].centroid * static_cast<double>(nj)) /
        static_cast<double>(ni + nj);
    if (std::abs(poly(merged)) > 1e-11 * poly_scale(merged)) break;
    clusters[bi] = {merged, ni + nj};
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
  }

  // Refine every cluster by Newton on p^(count-1): an m-fold root of p is a
  // simple, well-conditioned root of the (m-1)-th derivative, so this
  // recovers full precision where the raw approximations cannot.
  const auto derivative = [&](int order, Complex x) -> Complex {
    switch (order) {
      case 0:
        return poly(x);
      case 1:
        return dpoly(x);
      case 2:
        return (12.0 * x - 6.0 * e1) * x + 2.0 * e2;
      case 3:
        return 24.0 * x - 6.0 * e1;
      default:
        return Complex(24.0, 0.0);
    }
  };
  for (auto& c : clusters) {
    Complex x = c.centroid;
    for (int k = 0; k < 60; ++k) {
      const Complex df = derivative(c.count, x);
      if (std::abs(df) < 1e-300) break;
      const Complex step = derivative(c.count - 1, x) / df;
      x -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
    }
    // Accept only a local improvement; Newton must not leave the cluster.
    if (std::abs(x - c.centroid) <= merge_radius) c.centroid = x;
  }

  std::array<Complex, 4> out;
  std::size_t pos = 0;
  for (const auto& c : clusters)
    for (int k = 0; k < c.count; ++k) out[pos++] = c.centroid;

  // Residual acceptance on the matrix itself, not the polynomial.
  std::vector<double> residuals;
  bool ok = true;
  const double entry_scale = max_abs(a);
  for (const Complex& lambda : out) {
    SquareMatrix shifted = a;
    for (int i = 0; i < 4; ++i) shifted.at(i, i) -= lambda;
    const double r = std::abs(determinant(shifted));
    residuals.push_back(r);
    const double s = std::max(1.0, entry_scale + std::abs(lambda));
    if (r > 1e-10 * s * s * s * s) ok = false;
  }
  if (!ok) {
    throw NumericalError("eigenvalues4: root polishing missed residual target",
                          residuals);
  }
  return out;
}

bool is_unitary(const SquareMatrix& a, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("is_unitary: tol must be > 0");
  return max_abs_diff(matmul(dagger(a), a), SquareMatrix::identity(a.dim())) <=
         tol;
}

double max_abs(const SquareMatrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
  return m;
}

bool approx_equal(const SquareMatrix& a, const SquareMatrix& b, double tol) {
  return a.dim() == b.dim() && max_abs_diff(a, b) <= tol;
}

}  // namespace qent
