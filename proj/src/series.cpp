#include "rmt/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rmt {

double lp_distance(const std::vector<double>& a, const std::vector<double>& b, double p) {
  if (a.size() != b.size()) throw std::invalid_argument("lp_distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(std::fabs(a[i] - b[i]), p);
  return std::pow(s, 1.0 / p);
}

namespace {

// Contribution of one ordered walk labeling: rows of the constraint system
// follow perm, rates use the permuted walk indices.
double ordered_term(const Diagram& d, const std::vector<int>& perm, const PointConfig& pts,
                    const std::vector<double>& alpha, bool& degenerate) {
  const int k = d.k();
  const int ne = d.edge_count();
  Polytope p;
  p.coeff.assign(k, std::vector<int>(ne, 0));
  for (int r = 0; r < k; ++r) p.coeff[r] = d.traversal_counts()[perm[r]];
  p.alpha = alpha;

  std::vector<double> rates(ne, 0.0);
  for (int e = 0; e < ne; ++e) {
    // new labels of the two traversing walks
    int a = -1, b = -1;
    for (int r = 0; r < k; ++r) {
      for (int t = 0; t < p.coeff[r][e]; ++t) {
        if (a < 0)
          a = r;
        else
          b = r;
      }
    }
    if (b < 0) b = a;
    if (a != b) rates[e] = lp_distance(pts.points[a], pts.points[b], pts.p);
  }
  VolumeResult res = exp_linear_integral(p, rates);
  if (res.rank_deficient) degenerate = true;
  return res.value;
}

}  // namespace

SeriesResult ad_transform_series(int k, const PointConfig& points,
                                 const std::vector<double>& alpha, int beta, int s_max) {
  if (k < 1 || k > 2) throw std::invalid_argument("ad_transform_series: k in {1,2}");
  if (points.k() != k) throw std::invalid_argument("ad_transform_series: need k points");
  if (static_cast<int>(alpha.size()) != k)
    throw std::invalid_argument("ad_transform_series: need k alpha values");
  if (beta != 1 && beta != 2) throw std::invalid_argument("ad_transform_series: beta in {1,2}");
  if (points.p < 1.0 || points.p > 2.0)
    throw std::invalid_argument("ad_transform_series: p in [1,2]");
  for (double a : alpha)
    if (!(a > 0.0)) throw std::invalid_argument("ad_transform_series: alpha > 0");

  std::vector<Diagram> catalog = enumerate_diagrams(k, s_max);

  SeriesResult out;
  std::vector<SeriesTermRow> rows(s_max + 1);
  for (int s = 0; s <= s_max; ++s) rows[s].s = s;

  std::vector<int> identity(k);
  std::iota(identity.begin(), identity.end(), 0);

  for (const Diagram& d : catalog) {
    if (beta == 2 && !d.orientable()) continue;
    int s = d.genus_parameter();
    bool degenerate = false;
    double term = ordered_term(d, identity, points, alpha, degenerate);
    long long used = 1;
    if (k == 2) {
      // inequivalent orderings contribute separately
      if (d.canonical_key_permuted({0, 1}) != d.canonical_key_permuted({1, 0})) {
        term += ordered_term(d, {1, 0}, points, alpha, degenerate);
        used = 2;
      }
    }
    rows[s].term += term;
    rows[s].diagrams += used;
    if (degenerate) rows[s].degenerate += used;
  }

  double cum = 0.0;
  for (int s = 1; s <= s_max; ++s) {
    cum += rows[s].term;
    rows[s].partial_sum = cum;
    out.per_s.push_back(rows[s]);
  }
  out.value = cum;
  return out;
}

}  // namespace rmt
