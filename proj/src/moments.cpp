#include "rmt/moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rmt/reference.hpp"

namespace rmt {

double raw_moment(const EmpiricalMeasure& mu, int m) {
  if (m < 0) throw std::invalid_argument("raw_moment: m >= 0 required");
  double s = 0.0;
  for (const Atom& a : mu.atoms()) {
    double t = a.weight * std::pow(a.location, m);
    if (!std::isfinite(t)) throw std::overflow_error("raw_moment: |location|^m overflows");
    s += t;
  }
  if (!std::isfinite(s)) throw std::overflow_error("raw_moment: sum overflows");
  return s;
}

std::vector<double> modified_measure_moments(const EmpiricalMeasure& mu,
                                             const PolynomialFamily& family, int n_max) {
  if (n_max < 0) throw std::invalid_argument("modified moments: n >= 0 required");
  std::vector<double> sums(n_max + 1, 0.0);
  const double a = family.x_multiplier();
  for (const Atom& at : mu.atoms()) {
    double prev = 1.0;
    sums[0] += at.weight;
    if (n_max == 0) continue;
    double cur = a * at.location;
    sums[1] += at.weight * cur;
    for (int n = 1; n < n_max; ++n) {
      double next = a * at.location * cur - family.lag_coefficient(n) * prev;
      prev = cur;
      cur = next;
      sums[n + 1] += at.weight * cur;
    }
  }
  return sums;
}

double modified_measure_moment(const EmpiricalMeasure& mu, const PolynomialFamily& family, int n) {
  return modified_measure_moments(mu, family, n).back();
}

namespace linalg {

void matmul(const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& c,
            int n) {
  const std::size_t nn = static_cast<std::size_t>(n);
  c.assign(nn * nn, 0.0);
  constexpr int B = 64;
  for (int i0 = 0; i0 < n; i0 += B) {
    int i1 = std::min(i0 + B, n);
    for (int k0 = 0; k0 < n; k0 += B) {
      int k1 = std::min(k0 + B, n);
      for (int i = i0; i < i1; ++i) {
        double* ci = &c[nn * i];
        const double* ai = &a[nn * i];
        for (int k = k0; k < k1; ++k) {
          double aik = ai[k];
          if (aik == 0.0) continue;
          const double* bk = &b[nn * k];
          for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
      }
    }
  }
}

double sym_product_trace(const std::vector<double>& a, const std::vector<double>& b, int n) {
  // tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij B_ij for symmetric B.
  double s = 0.0;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  for (std::size_t t = 0; t < nn; ++t) s += a[t] * b[t];
  return s;
}

}  // namespace linalg

namespace {

// Dense scaled copy H / (2 sqrt(kappa-1)). Complex Hermitian input uses the
// real 2N embedding [[Re, -Im], [Im, Re]]: it is an algebra homomorphism, so
// traces of polynomials come out doubled and the caller divides by 2N.
std::vector<double> scaled_dense(const HermitianMatrix& h, int kappa, int& n_eff) {
  if (kappa < 2) throw std::invalid_argument("trace moments: kappa >= 2 required");
  double scale = 1.0 / (2.0 * std::sqrt(static_cast<double>(kappa) - 1.0));
  int n = h.dim();
  if (h.is_real()) {
    n_eff = n;
    std::vector<double> a = h.dense_real();
    for (double& x : a) x *= scale;
    return a;
  }
  n_eff = 2 * n;
  std::vector<double> a(static_cast<std::size_t>(n_eff) * n_eff, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      std::complex<double> z = h(u, v);
      a[static_cast<std::size_t>(u) * n_eff + v] = scale * z.real();
      a[static_cast<std::size_t>(u) * n_eff + (v + n)] = -scale * z.imag();
      a[static_cast<std::size_t>(u + n) * n_eff + v] = scale * z.imag();
      a[static_cast<std::size_t>(u + n) * n_eff + (v + n)] = scale * z.real();
    }
  return a;
}

double trace_of(const std::vector<double>& a, int n) {
  double t = 0.0;
  for (int i = 0; i < n; ++i) t += a[static_cast<std::size_t>(i) * n + i];
  return t;
}

}  // namespace

std::vector<double> trace_power_moments(const HermitianMatrix& h, int kappa, int m_max) {
  if (m_max < 0) throw std::invalid_argument("trace moments: m >= 0 required");
  std::vector<double> out(m_max + 1, 0.0);
  out[0] = 1.0;
  if (m_max == 0) return out;
  int n;
  std::vector<double> a = scaled_dense(h, kappa, n);
  // powers[j] = A^{j+1} for j+1 up to ceil(m_max/2)
  int half = (m_max + 1) / 2;
  std::vector<std::vector<double>> powers;
  powers.push_back(a);
  for (int j = 2; j <= half; ++j) {
    std::vector<double> next;
    linalg::matmul(powers.back(), a, next, n);
    powers.push_back(std::move(next));
  }
  out[1] = trace_of(a, n) / n;
  for (int m = 2; m <= m_max; ++m) {
    int lo = m / 2, hi = m - m / 2;
    out[m] = linalg::sym_product_trace(powers[lo - 1], powers[hi - 1], n) / n;
  }
  return out;
}

double trace_power_moment(const HermitianMatrix& h, int kappa, int m) {
  return trace_power_moments(h, kappa, m).back();
}

std::vector<double> modified_trace_moments(const HermitianMatrix& h, int kappa,
                                           const PolynomialFamily& family, int n_max) {
  if (n_max < 0) throw std::invalid_argument("modified trace moments: n >= 0 required");
  if (family.kind() == PolyKind::NonBacktracking &&
      std::llround(family.kappa()) != kappa)
    throw std::invalid_argument("modified trace moments: family kappa mismatch");
  std::vector<double> out(n_max + 1, 0.0);
  out[0] = 1.0;
  if (n_max == 0) return out;
  int n;
  std::vector<double> a = scaled_dense(h, kappa, n);
  const double mult = family.x_multiplier();
  // P_prev = I, P_cur = mult * A
  std::vector<double> p_prev(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) p_prev[static_cast<std::size_t>(i) * n + i] = 1.0;
  std::vector<double> p_cur = a;
  for (double& x : p_cur) x *= mult;
  out[1] = trace_of(p_cur, n) / n;
  std::vector<double> prod;
  for (int m = 1; m < n_max; ++m) {
    linalg::matmul(a, p_cur, prod, n);
    double beta = family.lag_coefficient(m);
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    for (std::size_t t = 0; t < nn; ++t) prod[t] = mult * prod[t] - beta * p_prev[t];
    p_prev.swap(p_cur);
    p_cur.swap(prod);
    out[m + 1] = trace_of(p_cur, n) / n;
  }
  return out;
}

double modified_trace_moment(const HermitianMatrix& h, int kappa, const PolynomialFamily& family,
                             int n) {
  return modified_trace_moments(h, kappa, family, n).back();
}

double hermite_sum_moment(const std::vector<double>& samples, int n) {
  if (n < 0) throw std::invalid_argument("hermite_sum_moment: n >= 0 required");
  if (samples.empty()) throw std::invalid_argument("hermite_sum_moment: empty sample");
  if (n == 0) return 1.0;
  PolynomialFamily he = PolynomialFamily::hermite_he();
  double norm = std::exp(-0.5 * std::lgamma(n + 1.0));
  double s = 0.0;
  for (double x : samples) s += he.evaluate(n, x);
  return norm * s / samples.size();
}

SoninReport sonin_bound_check(const EmpiricalMeasure& mu, int m, double moment_tol) {
  if (m < 2) throw std::invalid_argument("sonin_bound_check: m >= 2 required");
  for (int j = 0; j <= m; ++j) {
    double got = raw_moment(mu, j);
    double want = gaussian_moment(j).value();
    if (std::fabs(got - want) > moment_tol) {
      std::ostringstream os;
      os << "sonin_bound_check: moment mismatch at order " << j << ": s(" << j << ";mu)=" << got
         << " != " << want;
      throw std::domain_error(os.str());
    }
  }
  SoninReport rep;
  rep.matched_up_to = m;
  constexpr double pi = 3.14159265358979323846;
  rep.bound = std::sqrt(pi / (m - 1));
  // sup |F_mu - Phi| is attained at an atom, approaching from either side.
  double cum = 0.0, best = 0.0;
  for (const Atom& a : mu.atoms()) {
    double phi = normal_cdf(a.location);
    best = std::max(best, std::fabs(cum - phi));
    cum += a.weight;
    best = std::max(best, std::fabs(cum - phi));
  }
  rep.observed = best;
  rep.holds = rep.observed <= rep.bound;
  return rep;
}

EtReport erdos_turan_bracket(const EmpiricalMeasure& mu, double xi, int n0) {
  if (n0 < 1) throw std::invalid_argument("erdos_turan_bracket: n0 >= 1 required");
  EtReport rep;
  rep.rho = std::max(1.0 - std::fabs(xi), 1.0 / (static_cast<double>(n0) * n0));
  std::vector<double> tilde =
      modified_measure_moments(mu, PolynomialFamily::chebyshev_u(), n0);
  double s = 0.0;
  for (int n = 1; n <= n0; ++n) s += std::fabs(tilde[n]) / n;
  rep.bracket = rep.rho / n0 + std::sqrt(rep.rho) * s;
  rep.discrepancy = std::fabs(mu.cdf(xi) - semicircle_cdf(xi));
  return rep;
}

std::vector<double> corner_moment_profile(const EmpiricalMeasure& mu, double eps, double eta,
                                          const std::vector<double>& alpha_grid,
                                          MomentParity parity) {
  if (!(eps > 0.0) || !(eta > 0.0))
    throw std::invalid_argument("corner_moment_profile: eps, eta > 0 required");
  std::vector<double> out;
  out.reserve(alpha_grid.size());
  int want = parity == MomentParity::Even ? 0 : 1;
  for (double alpha : alpha_grid) {
    if (!(alpha > 0.0)) throw std::invalid_argument("corner_moment_profile: alpha > 0 required");
    long long m = std::llround(alpha / eta);
    if (m % 2 != want) ++m;
    if (m < 0 || m > 1000000) throw std::overflow_error("corner_moment_profile: order overflow");
    out.push_back(raw_moment(mu, static_cast<int>(m)) / eps);
  }
  return out;
}

KreinResult krein_transform(const EmpiricalMeasure& nu, double alpha, double window) {
  if (!(alpha > 0.0) || !(window > 0.0))
    throw std::invalid_argument("krein_transform: alpha, window > 0 required");
  double s = 0.0;
  for (const Atom& a : nu.atoms()) {
    double lam = a.location;
    if (std::fabs(lam) > window) continue;
    double g;
    if (lam < 0.0) {
      double r = std::sqrt(-lam);
      g = std::sin(alpha * r) / r;
    } else if (lam == 0.0) {
      g = alpha;
    } else {
      double r = std::sqrt(lam);
      g = std::sinh(alpha * r) / r;
    }
    s += a.weight * g;
  }
  return {s, window};
}

}  // namespace rmt
