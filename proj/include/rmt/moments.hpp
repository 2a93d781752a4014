#pragma once

#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/measure.hpp"
#include "rmt/polynomials.hpp"

namespace rmt {

enum class MomentKind { Raw, ModifiedChebyshev, ModifiedNonBacktracking, Hermite };

// Table of moment values by order, as produced by the scan experiments.
struct MomentTable {
  MomentKind kind = MomentKind::Raw;
  std::vector<int> orders;
  std::vector<double> values;
  std::vector<double> std_errors;  // empty for exact tables
};

// sum over atoms of weight * location^m; throws on double overflow.
double raw_moment(const EmpiricalMeasure& mu, int m);

// s~(n; mu) = integral of P_n d(mu), scalar three-term recurrence over atoms.
double modified_measure_moment(const EmpiricalMeasure& mu, const PolynomialFamily& family, int n);
std::vector<double> modified_measure_moments(const EmpiricalMeasure& mu,
                                             const PolynomialFamily& family, int n_max);

// (1/N) tr (H / 2 sqrt(kappa-1))^m via symmetric matrix products (no
// eigendecomposition). trace_power_moments returns orders 0..m_max at the
// cost of ceil(m_max/2) - 1 multiplications.
double trace_power_moment(const HermitianMatrix& h, int kappa, int m);
std::vector<double> trace_power_moments(const HermitianMatrix& h, int kappa, int m_max);

// (1/N) tr P_n(H / 2 sqrt(kappa-1)) by the three-term matrix recurrence,
// holding two N x N iterates. Returns orders 0..n_max.
std::vector<double> modified_trace_moments(const HermitianMatrix& h, int kappa,
                                           const PolynomialFamily& family, int n_max);
double modified_trace_moment(const HermitianMatrix& h, int kappa, const PolynomialFamily& family,
                             int n);

// Monte Carlo average of He_n(x)/sqrt(n!) over standardized-sum samples.
double hermite_sum_moment(const std::vector<double>& samples, int n);

struct SoninReport {
  int matched_up_to = 0;
  double bound = 0.0;
  double observed = 0.0;
  bool holds = false;
};

// Verifies s(j; mu) = s(j; gamma) for j <= m (throws naming the first
// mismatch), then compares sup |F_mu - Phi| with sqrt(pi/(m-1)).
SoninReport sonin_bound_check(const EmpiricalMeasure& mu, int m, double moment_tol = 1e-9);

struct EtReport {
  double rho = 0.0;
  double bracket = 0.0;
  double discrepancy = 0.0;
};

// Erdos-Turan style bracket at xi: rho(xi; n0) = max(1-|xi|, n0^{-2}),
// bracket = rho/n0 + sqrt(rho) * sum_{n<=n0} |s~(n; mu; sigma_wig)|/n,
// discrepancy = |mu(-inf,xi] - sigma_wig(-inf,xi]|.
EtReport erdos_turan_bracket(const EmpiricalMeasure& mu, double xi, int n0);

enum class MomentParity { Even, Odd };

// For each alpha: eps^{-1} s(m; mu) with m = round(alpha/eta) adjusted to the
// requested parity (the parity flag separates the two corners for symmetric
// measures).
std::vector<double> corner_moment_profile(const EmpiricalMeasure& mu, double eps, double eta,
                                          const std::vector<double>& alpha_grid,
                                          MomentParity parity = MomentParity::Even);

struct KreinResult {
  double value = 0.0;
  double window = 0.0;
};

// Hard-window regularized transform: sum over atoms lambda with
// |lambda| <= R of weight * g_alpha(lambda), where g_alpha(lambda) =
// sin(alpha sqrt(-lambda))/sqrt(-lambda) for lambda < 0, alpha at 0, and
// sinh(alpha sqrt(lambda))/sqrt(lambda) for lambda > 0.
KreinResult krein_transform(const EmpiricalMeasure& nu, double alpha, double window);

namespace linalg {
// C = A * B, dense row-major n x n.
void matmul(const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& c,
            int n);
// tr(A * B) for symmetric A, B.
double sym_product_trace(const std::vector<double>& a, const std::vector<double>& b, int n);
}  // namespace linalg

}  // namespace rmt
