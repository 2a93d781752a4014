#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmt/diagrams.hpp"

namespace rmt {

// Constrained weight set: variables w_e >= 0 with k linear equalities
// sum_e coeff[r][e] w_e = alpha[r]. For diagram polytopes the coefficients
// are the traversal counts c_r(e) in {0,1,2} and column sums are 2.
struct Polytope {
  std::vector<std::vector<int>> coeff;  // k rows of length E
  std::vector<double> alpha;            // k positive right-hand sides

  int variables() const { return coeff.empty() ? 0 : static_cast<int>(coeff[0].size()); }
  int constraints() const { return static_cast<int>(coeff.size()); }
};

Polytope diagram_polytope(const Diagram& d, const std::vector<double>& alpha);

struct VolumeResult {
  double value = 0.0;
  bool rank_deficient = false;  // constraint rows dependent; value is 0
  bool feasible = true;
  int dimension = 0;      // nominal chart dimension E - k
  std::string exact;      // exact rational "p/q" (projection-measure value)
};

// Lebesgue volume in the projection convention: the k equalities eliminate
// the lexicographically first invertible set of variables and the remaining
// coordinates carry the measure. Exact rational arithmetic (simplicial
// decomposition of the chart polytope).
VolumeResult polytope_volume(const Polytope& p);

// integral over the polytope of exp(-sum_e rates[e] w_e) in the same chart
// convention; closed-form exponential integrals over the simplices of the
// decomposition, with a series/bisection fallback near degenerate rate
// differences. All-zero rates reduce exactly to polytope_volume.
VolumeResult exp_linear_integral(const Polytope& p, const std::vector<double>& rates);

struct McVolume {
  double value = 0.0;
  double std_error = 0.0;
  long long samples = 0;
};

// Hit-or-miss Monte Carlo cross-check of the same chart volume.
McVolume polytope_volume_mc(const Polytope& p, long long samples, std::uint64_t seed);

}  // namespace rmt
