#include "rmt/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rmt {

EmpiricalMeasure::EmpiricalMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (const Atom& a : atoms_) {
    if (!(a.weight > 0.0)) throw std::invalid_argument("EmpiricalMeasure: weights must be > 0");
    if (!std::isfinite(a.location)) throw std::invalid_argument("EmpiricalMeasure: non-finite atom");
  }
  std::stable_sort(atoms_.begin(), atoms_.end(),
                   [](const Atom& a, const Atom& b) { return a.location < b.location; });
  cum_.resize(atoms_.size());
  double s = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    s += atoms_[i].weight;
    cum_[i] = s;
  }
  total_mass_ = s;
}

double EmpiricalMeasure::cdf(double x) const {
  if (atoms_.empty()) throw std::domain_error("cdf of empty measure");
  // last index with location <= x
  std::size_t lo = 0, hi = atoms_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (atoms_[mid].location <= x)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo == 0 ? 0.0 : cum_[lo - 1];
}

EmpiricalMeasure empirical_measure(const Spectrum& spec, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("empirical_measure: scale must be > 0");
  int n = spec.size();
  std::vector<Atom> atoms(n);
  double w = 1.0 / n;
  for (int j = 0; j < n; ++j) atoms[j] = {spec[j] / scale, w};
  return EmpiricalMeasure(std::move(atoms));
}

EmpiricalMeasure rescale(const EmpiricalMeasure& mu, const RescaleParams& p) {
  if (!(p.variable_scale > 0.0) || !(p.value_scale > 0.0))
    throw std::invalid_argument("rescale: eta and eps must be > 0");
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const Atom& a : mu.atoms())
    atoms.push_back({(a.location - p.center) / p.variable_scale, a.weight / p.value_scale});
  return EmpiricalMeasure(std::move(atoms));
}

RescaleParams compose(const RescaleParams& first, const RescaleParams& then) {
  // (x - c1)/h1 = y, (y - c2)/h2 = (x - (c1 + h1 c2)) / (h1 h2)
  return {first.center + first.variable_scale * then.center,
          first.variable_scale * then.variable_scale, first.value_scale * then.value_scale};
}

EmpiricalMeasure edge_point_process(const Spectrum& spec, EdgeMode mode, int band_width) {
  int n = spec.size();
  std::vector<Atom> atoms;
  atoms.reserve(n);
  if (mode == EdgeMode::WignerEdge) {
    double scale = std::pow(static_cast<double>(n), 1.0 / 6.0);
    double edge = 2.0 * std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) atoms.push_back({scale * (spec[j] - edge), 1.0});
  } else {
    if (band_width < 1) throw std::invalid_argument("edge_point_process: band width required");
    double scale = std::pow(static_cast<double>(n), 2.0 / 3.0) / std::sqrt(2.0 * band_width);
    double edge = 2.0 * std::sqrt(2.0 * band_width);
    for (int j = 0; j < n; ++j) atoms.push_back({scale * (spec[j] - edge), 1.0});
  }
  return EmpiricalMeasure(std::move(atoms));
}

double sup_cdf_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu) {
  if (mu.empty() || nu.empty()) throw std::domain_error("sup_cdf_distance: empty measure");
  const auto& a = mu.atoms();
  const auto& b = nu.atoms();
  std::size_t i = 0, j = 0;
  double fa = 0.0, fb = 0.0, best = 0.0;
  while (i < a.size() || j < b.size()) {
    double x;
    if (j >= b.size() || (i < a.size() && a[i].location <= b[j].location))
      x = a[i].location;
    else
      x = b[j].location;
    while (i < a.size() && a[i].location == x) fa += a[i++].weight;
    while (j < b.size() && b[j].location == x) fb += b[j++].weight;
    best = std::max(best, std::fabs(fa - fb));
  }
  return best;
}

std::string spectrum_to_csv(const Spectrum& spec) {
  std::ostringstream os;
  os.precision(17);
  os << "index,value\n";
  for (int j = 0; j < spec.size(); ++j) os << j << ',' << spec[j] << '\n';
  return os.str();
}

std::string measure_to_csv(const EmpiricalMeasure& mu) {
  std::ostringstream os;
  os.precision(17);
  os << "location,weight\n";
  for (const Atom& a : mu.atoms()) os << a.location << ',' << a.weight << '\n';
  return os.str();
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::domain_error("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double best = 0.0;
  double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  while (i < a.size() || j < b.size()) {
    double x;
    if (j >= b.size() || (i < a.size() && a[i] <= b[j]))
      x = a[i];
    else
      x = b[j];
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    best = std::max(best, std::fabs(i / na - j / nb));
  }
  return best;
}

}  // namespace rmt
