#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/rng.hpp"
#include "rmt/spectra.hpp"

using namespace rmt;

namespace {

std::shared_ptr<const GraphSpec> complete(int n) {
  return std::make_shared<const GraphSpec>(GraphSpec::complete(n));
}

HermitianMatrix adjacency(const std::shared_ptr<const GraphSpec>& g) {
  HermitianMatrix h(g, true);
  int n = g->vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g->has_edge(u, v)) h.set(u, v, 1.0);
  return h;
}

// Characteristic polynomial coefficients of a small integer matrix by exact
// cofactor expansion over lambda: p(l) = det(A - l I). Returns coefficients
// of l^0..l^n as doubles (exact for small integer input).
std::vector<double> charpoly_4x4(const std::vector<double>& a) {
  // interpolate det(A - l I) at 5 integer points and solve the Vandermonde
  // exactly by Lagrange; for 4x4 integer matrices everything stays exact.
  auto det4 = [](std::vector<double> m) {
    // cofactor expansion, 4x4
    auto det3 = [](double m00, double m01, double m02, double m10, double m11, double m12,
                   double m20, double m21, double m22) {
      return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
             m02 * (m10 * m21 - m11 * m20);
    };
    double d = 0.0;
    for (int c = 0; c < 4; ++c) {
      double sub[9];
      int t = 0;
      for (int i = 1; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (j != c) sub[t++] = m[i * 4 + j];
      double minor = det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6], sub[7], sub[8]);
      d += ((c % 2) ? -1.0 : 1.0) * m[c] * minor;
    }
    return d;
  };
  std::vector<double> xs = {-2, -1, 0, 1, 2};
  std::vector<double> ys;
  for (double x : xs) {
    std::vector<double> m = a;
    for (int i = 0; i < 4; ++i) m[i * 4 + i] -= x;
    ys.push_back(det4(m));
  }
  // Lagrange to monomial coefficients
  std::vector<double> coeff(5, 0.0);
  for (int i = 0; i < 5; ++i) {
    std::vector<double> basis = {1.0};
    double denom = 1.0;
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      denom *= xs[i] - xs[j];
      std::vector<double> next(basis.size() + 1, 0.0);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t] -= xs[j] * basis[t];
        next[t + 1] += basis[t];
      }
      basis = next;
    }
    for (std::size_t t = 0; t < basis.size(); ++t) coeff[t] += ys[i] * basis[t] / denom;
  }
  return coeff;
}

double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * x + c[i];
  return v;
}

}  // namespace

TEST_CASE("2x2 swap matrix has eigenvalues +-1") {
  auto g = complete(2);
  HermitianMatrix h = adjacency(g);
  Spectrum s = eigenvalues(h);
  CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("K3 adjacency spectrum is {2,-1,-1}") {
  Spectrum s = eigenvalues(adjacency(complete(3)));
  CHECK(s[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s[2] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("random 4x4: eigenvalues are the roots of the characteristic polynomial") {
  // small integer symmetric matrix; oracle = exact char poly + bisection
  RandomStream rs(99, 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> a(16, 0.0);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        double x = std::floor(rs.next_unit_open() * 7.0) - 3.0;
        a[i * 4 + j] = x;
        a[j * 4 + i] = x;
      }
    std::vector<double> coeff = charpoly_4x4(a);
    std::vector<double> eig = symmetric_eigenvalues(a, 4);
    // oracle roots by bisection between sign changes of p on a fine grid
    std::vector<double> roots;
    double lo = -20.0, hi = 20.0, step = 1e-3;
    double px = poly_eval(coeff, lo);
    for (double x = lo + step; x <= hi; x += step) {
      double py = poly_eval(coeff, x);
      if (px == 0.0) roots.push_back(x - step);
      if (px * py < 0) {
        double a0 = x - step, b0 = x;
        for (int it = 0; it < 80; ++it) {
          double mid = 0.5 * (a0 + b0);
          if (poly_eval(coeff, a0) * poly_eval(coeff, mid) <= 0)
            b0 = mid;
          else
            a0 = mid;
        }
        roots.push_back(0.5 * (a0 + b0));
      }
      px = py;
    }
    if (roots.size() == 4) {  // distinct roots resolved by the oracle
      std::sort(roots.begin(), roots.end());
      for (int i = 0; i < 4; ++i) CHECK(std::fabs(eig[i] - roots[i]) <= 1e-8);
    } else {
      // repeated roots: still require p(eigenvalue) ~ 0
      for (double l : eig) CHECK(std::fabs(poly_eval(coeff, l)) <= 1e-6);
    }
  }
}

TEST_CASE("trace identities: tr H = sum xi, tr H^2 = sum xi^2") {
  auto g = complete(40);
  EntryDistribution diag(EntryKind::RealGaussian, EntryTarget::Diagonal);
  EntryDistribution off(EntryKind::RealGaussian, EntryTarget::OffDiagonal);
  HermitianMatrix h = sample_matrix(g, diag, off, 21);
  Spectrum s = eigenvalues(h);
  double t1 = 0.0, t2 = 0.0;
  for (double x : s.values()) {
    t1 += x;
    t2 += x * x;
  }
  double trace = h.trace().real();
  double fro2 = h.frobenius_norm() * h.frobenius_norm();
  CHECK(std::fabs(t1 - trace) <= 1e-10 * std::max(1.0, std::fabs(trace)) * 100);
  CHECK(std::fabs(t2 - fro2) <= 1e-10 * fro2 * 100);
}

TEST_CASE("complex Hermitian via 2N embedding") {
  auto g = complete(2);
  HermitianMatrix h(g, false);
  h.set(0, 1, std::complex<double>(0.0, 1.0));  // [[0, i], [-i, 0]]
  Spectrum s = eigenvalues(h);
  CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(-1.0).epsilon(1e-12));

  auto g2 = complete(25);
  EntryDistribution diag(EntryKind::RealGaussian, EntryTarget::Diagonal);
  EntryDistribution off(EntryKind::ComplexGaussian, EntryTarget::OffDiagonal);
  HermitianMatrix hc = sample_matrix(g2, diag, off, 5);
  Spectrum sc = eigenvalues(hc);
  double t1 = 0.0, t2 = 0.0;
  for (double x : sc.values()) {
    t1 += x;
    t2 += x * x;
  }
  CHECK(t1 == doctest::Approx(hc.trace().real()).epsilon(1e-9));
  double fro2 = hc.frobenius_norm() * hc.frobenius_norm();
  CHECK(t2 == doctest::Approx(fro2).epsilon(1e-9));
}

TEST_CASE("eigenpair residuals on a spot-check matrix") {
  const int n = 120;
  auto g = complete(n);
  EntryDistribution diag(EntryKind::Zero, EntryTarget::Diagonal);
  EntryDistribution off(EntryKind::RealGaussian, EntryTarget::OffDiagonal);
  HermitianMatrix h = sample_matrix(g, diag, off, 77);
  std::vector<double> a = h.dense_real();
  EigenSystem sys = symmetric_eigensystem(a, n);
  double hnorm = 0.0;
  for (double x : sys.values) hnorm = std::max(hnorm, std::fabs(x));
  for (int j = 0; j < n; j += 7) {
    // residual || H v - lambda v ||
    double res = 0.0, vnorm = 0.0;
    for (int i = 0; i < n; ++i) {
      double hv = 0.0;
      for (int t = 0; t < n; ++t)
        hv += a[static_cast<std::size_t>(i) * n + t] * sys.vectors[static_cast<std::size_t>(t) * n + j];
      double diff = hv - sys.values[j] * sys.vectors[static_cast<std::size_t>(i) * n + j];
      res += diff * diff;
      vnorm += sys.vectors[static_cast<std::size_t>(i) * n + j] *
               sys.vectors[static_cast<std::size_t>(i) * n + j];
    }
    CHECK(std::sqrt(res / vnorm) <= 1e-8 * hnorm);
  }
}

TEST_CASE("spectrum validation") {
  CHECK_THROWS(Spectrum({1.0, 2.0}));          // not descending
  CHECK_THROWS(Spectrum(std::vector<double>{}));  // empty
}
