#pragma once

#include <string>
#include <vector>

namespace rmt {

enum class PolyKind { ChebyshevU, NonBacktracking, HermiteHe };

// Three-term recurrence family:
//   ChebyshevU:       U_{n+1} = 2x U_n - U_{n-1},            U_0 = 1, U_1 = 2x
//   NonBacktracking:  P_n = U_n - U_{n-2}/(kappa-1), equivalently
//                     P_{n+1} = 2x P_n - (1 + [n==1]/(kappa-1)) P_{n-1}
//   HermiteHe:        He_{n+1} = x He_n - n He_{n-1},         He_0 = 1, He_1 = x
class PolynomialFamily {
 public:
  static PolynomialFamily chebyshev_u();
  static PolynomialFamily non_backtracking(double kappa);
  static PolynomialFamily hermite_he();

  PolyKind kind() const { return kind_; }
  double kappa() const { return kappa_; }

  // Multiplier a in P_{n+1} = a x P_n - b_n P_{n-1} (a = 2 or 1).
  double x_multiplier() const { return kind_ == PolyKind::HermiteHe ? 1.0 : 2.0; }
  // Coefficient b_n of P_{n-1} in the step producing P_{n+1} from P_n, P_{n-1}.
  double lag_coefficient(int n) const;

  double evaluate(int n, double x) const;

  // Exact monomial coefficients (index = power of x), computed in checked
  // 64-bit integers; n <= 30.
  std::vector<double> monomial_coefficients(int n) const;

  std::string name() const;

 private:
  PolynomialFamily(PolyKind k, double kappa) : kind_(k), kappa_(kappa) {}
  PolyKind kind_;
  double kappa_;
};

}  // namespace rmt
