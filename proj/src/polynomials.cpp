#include "rmt/polynomials.hpp"

#include <stdexcept>

#include "rmt/rational.hpp"

namespace rmt {

PolynomialFamily PolynomialFamily::chebyshev_u() { return {PolyKind::ChebyshevU, 0.0}; }

PolynomialFamily PolynomialFamily::non_backtracking(double kappa) {
  if (!(kappa >= 2.0))
    throw std::invalid_argument("non-backtracking family needs kappa >= 2");
  return {PolyKind::NonBacktracking, kappa};
}

PolynomialFamily PolynomialFamily::hermite_he() { return {PolyKind::HermiteHe, 0.0}; }

double PolynomialFamily::lag_coefficient(int n) const {
  switch (kind_) {
    case PolyKind::ChebyshevU:
      return 1.0;
    case PolyKind::NonBacktracking:
      return n == 1 ? 1.0 + 1.0 / (kappa_ - 1.0) : 1.0;
    case PolyKind::HermiteHe:
      return static_cast<double>(n);
  }
  return 1.0;
}

double PolynomialFamily::evaluate(int n, double x) const {
  if (n < 0) throw std::invalid_argument("polynomial order must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double a = x_multiplier();
  double cur = a * x;
  for (int m = 1; m < n; ++m) {
    double next = a * x * cur - lag_coefficient(m) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// Exact integer coefficient recurrences; overflow-checked 64-bit.
std::vector<std::int64_t> chebyshev_u_int(int n) {
  std::vector<std::int64_t> prev{1};  // U_0
  if (n == 0) return prev;
  std::vector<std::int64_t> cur{0, 2};  // U_1 = 2x
  for (int m = 1; m < n; ++m) {
    std::vector<std::int64_t> next(m + 2, 0);
    for (int j = 0; j <= m; ++j) next[j + 1] = checked_mul(2, cur[j]);
    for (int j = 0; j < static_cast<int>(prev.size()); ++j)
      next[j] = checked_add(next[j], -prev[j]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::int64_t> hermite_he_int(int n) {
  std::vector<std::int64_t> prev{1};
  if (n == 0) return prev;
  std::vector<std::int64_t> cur{0, 1};  // He_1 = x
  for (int m = 1; m < n; ++m) {
    std::vector<std::int64_t> next(m + 2, 0);
    for (int j = 0; j <= m; ++j) next[j + 1] = cur[j];
    for (int j = 0; j < static_cast<int>(prev.size()); ++j)
      next[j] = checked_add(next[j], checked_mul(-static_cast<std::int64_t>(m), prev[j]));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::vector<double> PolynomialFamily::monomial_coefficients(int n) const {
  if (n < 0) throw std::invalid_argument("polynomial order must be >= 0");
  if (n > 30) throw std::invalid_argument("monomial coefficients limited to n <= 30");
  switch (kind_) {
    case PolyKind::ChebyshevU: {
      auto c = chebyshev_u_int(n);
      return std::vector<double>(c.begin(), c.end());
    }
    case PolyKind::HermiteHe: {
      auto c = hermite_he_int(n);
      return std::vector<double>(c.begin(), c.end());
    }
    case PolyKind::NonBacktracking: {
      auto un = chebyshev_u_int(n);
      std::vector<double> c(un.begin(), un.end());
      if (n >= 2) {
        auto um = chebyshev_u_int(n - 2);
        for (std::size_t j = 0; j < um.size(); ++j) c[j] -= um[j] / (kappa_ - 1.0);
      }
      return c;
    }
  }
  return {};
}

std::string PolynomialFamily::name() const {
  switch (kind_) {
    case PolyKind::ChebyshevU:
      return "chebyshev-u";
    case PolyKind::NonBacktracking:
      return "non-backtracking(kappa=" + std::to_string(kappa_) + ")";
    case PolyKind::HermiteHe:
      return "hermite-he";
  }
  return "?";
}

}  // namespace rmt
