#pragma once

#include <utility>
#include <vector>

#include "rmt/spectra.hpp"

namespace rmt {

struct Atom {
  double location;
  double weight;
};

// Weighted atom list on the real line. Total mass need not be 1: rescaled
// point processes carry non-probability weights.
class EmpiricalMeasure {
 public:
  EmpiricalMeasure() = default;
  explicit EmpiricalMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  double total_mass() const { return total_mass_; }

  // Right-continuous distribution function mu(-inf, x].
  double cdf(double x) const;

  double min_location() const { return atoms_.front().location; }
  double max_location() const { return atoms_.back().location; }

 private:
  std::vector<Atom> atoms_;        // sorted by location
  std::vector<double> cum_;        // cumulative weights
  double total_mass_ = 0.0;
};

struct RescaleParams {
  double center = 0.0;      // xi_0
  double variable_scale = 1.0;  // eta > 0
  double value_scale = 1.0;     // epsilon > 0
};

// Probability measure with an atom of weight 1/N at xi_j / scale.
EmpiricalMeasure empirical_measure(const Spectrum& spec, double scale);

// Atom x -> (x - center)/eta, weight -> weight/eps. Composition of two
// rescalings is a rescaling with composed parameters.
EmpiricalMeasure rescale(const EmpiricalMeasure& mu, const RescaleParams& p);
RescaleParams compose(const RescaleParams& first, const RescaleParams& then);

enum class EdgeMode { WignerEdge, BandEdge };

// Upper-edge point process. WignerEdge: atoms N^{1/6}(xi_j - 2 sqrt(N)).
// BandEdge (bandwidth W): atoms (N^{2/3}/sqrt(2W)) (xi_j - 2 sqrt(2W)).
// Unit weights.
EmpiricalMeasure edge_point_process(const Spectrum& spec, EdgeMode mode, int band_width = 0);

// Exact sup over xi of |F_mu(xi) - F_nu(xi)|, evaluated over the union of
// atom locations (the supremum of a piecewise-constant difference).
double sup_cdf_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu);

// Two-sample Kolmogorov-Smirnov statistic on scalar samples.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// CSV exports: (index, value) for spectra, (location, weight) for measures.
std::string spectrum_to_csv(const Spectrum& spec);
std::string measure_to_csv(const EmpiricalMeasure& mu);

}  // namespace rmt
