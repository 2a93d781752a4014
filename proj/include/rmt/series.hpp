#pragma once

#include <vector>

#include "rmt/diagrams.hpp"
#include "rmt/polytope.hpp"

namespace rmt {

// k points in R^d with an l_p exponent, p in [1,2]; pairwise distances feed
// the exponential weights of the transform series.
struct PointConfig {
  std::vector<std::vector<double>> points;
  double p = 2.0;

  int k() const { return static_cast<int>(points.size()); }
  int dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
};

double lp_distance(const std::vector<double>& a, const std::vector<double>& b, double p);

struct SeriesTermRow {
  int s = 0;
  double term = 0.0;         // total contribution of genus parameter s
  double partial_sum = 0.0;  // cumulative over s' <= s
  long long diagrams = 0;
  long long degenerate = 0;  // rank-deficient polytopes contributing 0
};

struct SeriesResult {
  double value = 0.0;
  std::vector<SeriesTermRow> per_s;
};

// Transform series over the diagram catalog: for each diagram (beta = 1: all,
// beta = 2: orientable only) integrates exp(-sum_e ||x_{r+(e)} - x_{r-(e)}||_p w(e))
// over the polytope Delta_D(alpha). For k = 2, catalog entries whose two walk
// orderings are inequivalent contribute both orderings, which makes the sum
// symmetric under permuting (points, alpha) jointly. With all points
// coincident the rates vanish and the value is the sum of polytope volumes.
SeriesResult ad_transform_series(int k, const PointConfig& points,
                                 const std::vector<double>& alpha, int beta, int s_max);

}  // namespace rmt
