#include "rmt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmt {
namespace {

// Householder reduction of a dense symmetric matrix (row-major, size n) to
// tridiagonal form. On exit d holds the diagonal and e[1..n-1] the
// subdiagonal. When with_vectors is set, a is overwritten with the
// accumulated orthogonal transform (columns used by the QL stage).
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e,
                    bool with_vectors) {
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (with_vectors) A(j, i) = A(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  if (with_vectors) d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (with_vectors) {
      int l = i - 1;
      if (d[i] != 0.0) {
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
          for (int k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
        }
      }
      d[i] = A(i, i);
      A(i, i) = 1.0;
      for (int j = 0; j <= l; ++j) A(j, i) = A(i, j) = 0.0;
    } else {
      d[i] = A(i, i);
    }
  }
}

inline double sign_with(double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); }

// Implicit-shift QL on a tridiagonal matrix; rotates the columns of z when
// provided. Throws if an eigenvalue fails to converge within the sweep cap.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n, std::vector<double>* z,
                 const EigenOptions& opts) {
  const double eps = std::max(opts.tolerance, std::numeric_limits<double>::epsilon());
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == opts.max_sweeps)
          throw std::runtime_error("eigensolver: QL iteration failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + sign_with(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            for (int k = 0; k < n; ++k) {
              double& zk1 = (*z)[static_cast<std::size_t>(k) * n + i + 1];
              double& zk0 = (*z)[static_cast<std::size_t>(k) * n + i];
              f = zk1;
              zk1 = s * zk0 + c * f;
              zk0 = c * zk0 - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

Spectrum::Spectrum(std::vector<double> descending) : values_(std::move(descending)) {
  if (values_.empty()) throw std::invalid_argument("Spectrum: empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw std::invalid_argument("Spectrum: non-finite value");
    if (i > 0 && values_[i - 1] < values_[i])
      throw std::invalid_argument("Spectrum: not sorted descending");
  }
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, const EigenOptions& opts) {
  if (n == 1) return {a[0]};
  std::vector<double> d, e;
  tridiagonalize(a, n, d, e, false);
  ql_implicit(d, e, n, nullptr, opts);
  std::sort(d.begin(), d.end());
  return d;
}

EigenSystem symmetric_eigensystem(std::vector<double> a, int n, const EigenOptions& opts) {
  EigenSystem sys;
  if (n == 1) {
    sys.values = {a[0]};
    sys.vectors = {1.0};
    return sys;
  }
  std::vector<double> d, e;
  tridiagonalize(a, n, d, e, true);
  ql_implicit(d, e, n, &a, opts);
  // sort ascending, permuting vector columns along
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int p, int q) { return d[p] < d[q]; });
  sys.values.resize(n);
  sys.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    sys.values[j] = d[idx[j]];
    for (int k = 0; k < n; ++k)
      sys.vectors[static_cast<std::size_t>(k) * n + j] = a[static_cast<std::size_t>(k) * n + idx[j]];
  }
  return sys;
}

namespace {

std::vector<double> hermitian_eigenvalues_ascending(const HermitianMatrix& h,
                                                    const EigenOptions& opts) {
  int n = h.dim();
  if (h.is_real()) return symmetric_eigenvalues(h.dense_real(), n, opts);
  // 2N real embedding [[Re, -Im], [Im, Re]]; each eigenvalue doubled.
  int m = 2 * n;
  std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      std::complex<double> z = h(u, v);
      a[static_cast<std::size_t>(u) * m + v] = z.real();
      a[static_cast<std::size_t>(u) * m + (v + n)] = -z.imag();
      a[static_cast<std::size_t>(u + n) * m + v] = z.imag();
      a[static_cast<std::size_t>(u + n) * m + (v + n)] = z.real();
    }
  }
  std::vector<double> doubled = symmetric_eigenvalues(std::move(a), m, opts);
  std::vector<double> vals(n);
  for (int j = 0; j < n; ++j) vals[j] = 0.5 * (doubled[2 * j] + doubled[2 * j + 1]);
  return vals;
}

}  // namespace

Spectrum eigenvalues(const HermitianMatrix& h, const EigenOptions& opts) {
  std::vector<double> vals = hermitian_eigenvalues_ascending(h, opts);
  std::reverse(vals.begin(), vals.end());
  return Spectrum(std::move(vals));
}

int numerical_rank_of_difference(const HermitianMatrix& h, const HermitianMatrix& g, double eps) {
  if (h.dim() != g.dim()) throw std::invalid_argument("rank: dimension mismatch");
  int n = h.dim();
  bool real = h.is_real() && g.is_real();
  auto graph = h.graph_ptr();
  HermitianMatrix diff(graph, real);
  double scale = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      std::complex<double> z = h(u, v) - g(u, v);
      diff.set(u, v, z);
      scale = std::max(scale, std::abs(z));
    }
  if (scale == 0.0) return 0;
  std::vector<double> vals = hermitian_eigenvalues_ascending(diff, {});
  double cut = eps * std::max(scale, 1.0);
  int r = 0;
  for (double x : vals)
    if (std::fabs(x) > cut) ++r;
  return r;
}

}  // namespace rmt
