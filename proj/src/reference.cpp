#include "rmt/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/spectra.hpp"

namespace rmt {

std::int64_t catalan(int j) {
  if (j < 0) throw std::invalid_argument("catalan: j >= 0 required");
  if (j > 33) throw std::overflow_error("catalan: exceeds 64-bit range");
  // binom(2j, j)/(j+1) built multiplicatively: c_{j+1} = c_j * 2(2j+1)/(j+2)
  std::int64_t c = 1;
  for (int i = 0; i < j; ++i) {
    c = checked_mul(c, 2 * (2 * static_cast<std::int64_t>(i) + 1));
    c /= (i + 2);
  }
  return c;
}

Rational semicircle_moment(int m) {
  if (m < 0) throw std::invalid_argument("semicircle_moment: m >= 0 required");
  if (m % 2 == 1) return Rational(0);
  if (m > 62) throw std::overflow_error("semicircle_moment: 2^m exceeds 64-bit range");
  return Rational(catalan(m / 2), static_cast<std::int64_t>(1) << m);
}

Rational gaussian_moment(int m) {
  if (m < 0) throw std::invalid_argument("gaussian_moment: m >= 0 required");
  if (m % 2 == 1) return Rational(0);
  std::int64_t v = 1;
  for (int i = m - 1; i >= 3; i -= 2) v = checked_mul(v, i);
  return Rational(v);
}

double semicircle_cdf(double x) {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  constexpr double pi = 3.14159265358979323846;
  return 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / pi;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440); }

EmpiricalMeasure semicircle_quadrature(int n) {
  if (n < 1) throw std::invalid_argument("semicircle_quadrature: n >= 1 required");
  constexpr double pi = 3.14159265358979323846;
  std::vector<Atom> atoms(n);
  for (int j = 1; j <= n; ++j) {
    double theta = pi * j / (n + 1);
    double s = std::sin(theta);
    atoms[j - 1] = {std::cos(theta), 2.0 / (n + 1) * s * s};
  }
  return EmpiricalMeasure(std::move(atoms));
}

EmpiricalMeasure gauss_hermite_measure(int k) {
  if (k < 1) throw std::invalid_argument("gauss_hermite_measure: k >= 1 required");
  // Jacobi matrix of He_n: zero diagonal, off-diagonal sqrt(j).
  std::vector<double> a(static_cast<std::size_t>(k) * k, 0.0);
  for (int j = 1; j < k; ++j) {
    double b = std::sqrt(static_cast<double>(j));
    a[static_cast<std::size_t>(j) * k + (j - 1)] = b;
    a[static_cast<std::size_t>(j - 1) * k + j] = b;
  }
  EigenSystem sys = symmetric_eigensystem(std::move(a), k);
  std::vector<Atom> atoms(k);
  for (int j = 0; j < k; ++j) {
    double v0 = sys.vectors[static_cast<std::size_t>(0) * k + j];
    atoms[j] = {sys.values[j], v0 * v0};
  }
  return EmpiricalMeasure(std::move(atoms));
}

}  // namespace rmt
