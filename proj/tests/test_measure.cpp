#include <doctest.h>

#include <cmath>
#include <memory>

#include "rmt/ensembles.hpp"
#include "rmt/measure.hpp"
#include "rmt/rng.hpp"

using namespace rmt;

TEST_CASE("empirical measure from spectrum") {
  Spectrum s({2.0, -1.0, -1.0});
  EmpiricalMeasure mu = empirical_measure(s, 2.0);
  REQUIRE(mu.size() == 3);
  CHECK(mu.atoms()[0].location == doctest::Approx(-0.5));
  CHECK(mu.atoms()[1].location == doctest::Approx(-0.5));
  CHECK(mu.atoms()[2].location == doctest::Approx(1.0));
  for (const Atom& a : mu.atoms()) CHECK(a.weight == doctest::Approx(1.0 / 3));
  CHECK(mu.total_mass() == doctest::Approx(1.0));

  EmpiricalMeasure same = empirical_measure(s, 1.0);
  CHECK(same.atoms()[2].location == doctest::Approx(2.0));
}

TEST_CASE("cdf of a point mass") {
  EmpiricalMeasure delta({{0.0, 1.0}});
  CHECK(delta.cdf(-1.0) == 0.0);
  CHECK(delta.cdf(0.0) == 1.0);  // right-continuous
  CHECK(delta.cdf(1.0) == 1.0);
}

TEST_CASE("rescale maps atoms and weights") {
  EmpiricalMeasure mu({{1.5, 1.0}});
  EmpiricalMeasure out = rescale(mu, {1.0, 0.25, 0.5});
  CHECK(out.atoms()[0].location == doctest::Approx(2.0));
  CHECK(out.atoms()[0].weight == doctest::Approx(2.0));

  EmpiricalMeasure id = rescale(mu, {0.0, 1.0, 1.0});
  CHECK(id.atoms()[0].location == doctest::Approx(1.5));
  CHECK(id.atoms()[0].weight == doctest::Approx(1.0));
}

TEST_CASE("rescale composes exactly on atoms") {
  RandomStream rs(4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Atom> atoms;
    for (int i = 0; i < 5; ++i) atoms.push_back({rs.next_gaussian() * 3, rs.next_unit()});
    EmpiricalMeasure mu(atoms);
    RescaleParams p1{rs.next_gaussian(), rs.next_unit(), rs.next_unit()};
    RescaleParams p2{rs.next_gaussian(), rs.next_unit(), rs.next_unit()};
    EmpiricalMeasure two = rescale(rescale(mu, p1), p2);
    EmpiricalMeasure one = rescale(mu, compose(p1, p2));
    REQUIRE(two.size() == one.size());
    for (std::size_t i = 0; i < two.size(); ++i) {
      CHECK(two.atoms()[i].location == doctest::Approx(one.atoms()[i].location).epsilon(1e-12));
      CHECK(two.atoms()[i].weight == doctest::Approx(one.atoms()[i].weight).epsilon(1e-12));
    }
  }
}

TEST_CASE("edge point process arithmetic") {
  // eigenvalue exactly 2 sqrt(N) maps to 0
  int n = 4;
  Spectrum s({5.0, 2.0 * std::sqrt(4.0), 0.0, -1.0});
  EmpiricalMeasure pp = edge_point_process(s, EdgeMode::WignerEdge);
  // atoms sorted ascending; the atom from xi = 4 sits at 0, xi_1 = 5 maps to 4^{1/6}
  bool has_zero = false;
  for (const Atom& a : pp.atoms())
    if (std::fabs(a.location) < 1e-12) has_zero = true;
  CHECK(has_zero);
  CHECK(pp.max_location() == doctest::Approx(std::pow(4.0, 1.0 / 6.0)).epsilon(1e-12));
  for (const Atom& a : pp.atoms()) CHECK(a.weight == 1.0);
  CHECK(pp.total_mass() == doctest::Approx(n));
}

TEST_CASE("band edge rescaling") {
  int w = 2;
  double edge = 2.0 * std::sqrt(2.0 * w);
  Spectrum s({edge, 0.0});
  EmpiricalMeasure pp = edge_point_process(s, EdgeMode::BandEdge, w);
  CHECK(pp.max_location() == doctest::Approx(0.0));
}

TEST_CASE("sup cdf distance examples") {
  EmpiricalMeasure delta0({{0.0, 1.0}});
  EmpiricalMeasure uniform01({{0.0, 0.5}, {1.0, 0.5}});
  CHECK(sup_cdf_distance(delta0, delta0) == 0.0);
  CHECK(sup_cdf_distance(uniform01, delta0) == doctest::Approx(0.5));
}

TEST_CASE("sup cdf distance is a metric on random triples") {
  RandomStream rs(11, 0);
  for (int trial = 0; trial < 25; ++trial) {
    auto random_measure = [&](int n) {
      std::vector<Atom> atoms;
      double total = 0.0;
      for (int i = 0; i < n; ++i) {
        double w = rs.next_unit();
        atoms.push_back({std::floor(rs.next_unit_open() * 10.0) / 2.0, w});
        total += w;
      }
      for (Atom& a : atoms) a.weight /= total;  // equal total mass 1
      return EmpiricalMeasure(atoms);
    };
    EmpiricalMeasure a = random_measure(4), b = random_measure(5), c = random_measure(3);
    double ab = sup_cdf_distance(a, b);
    double ba = sup_cdf_distance(b, a);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-15));
    CHECK(ab <= sup_cdf_distance(a, c) + sup_cdf_distance(c, b) + 1e-12);
    CHECK(sup_cdf_distance(a, a) == 0.0);
  }
}

TEST_CASE("bulk-rescaled spectra concentrate on [-1.2, 1.2]") {
  const int n = 300;
  auto g = std::make_shared<const GraphSpec>(GraphSpec::complete(n));
  EntryDistribution diag(EntryKind::Zero, EntryTarget::Diagonal);
  EntryDistribution off(EntryKind::RademacherSign, EntryTarget::OffDiagonal);
  double scale = 2.0 * std::sqrt(n - 1.0);
  for (int seed = 0; seed < 10; ++seed) {
    Spectrum s = eigenvalues(sample_matrix(g, diag, off, replicate_seed(60, seed)));
    EmpiricalMeasure mu = empirical_measure(s, scale);
    CHECK(mu.min_location() >= -1.2);
    CHECK(mu.max_location() <= 1.2);
  }
}

TEST_CASE("two-sample KS statistic") {
  CHECK(ks_two_sample({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}) == 0.0);
  CHECK(ks_two_sample({0.0, 0.0}, {1.0, 1.0}) == doctest::Approx(1.0));
  CHECK(ks_two_sample({0.0, 1.0}, {0.5, 1.5}) == doctest::Approx(0.5));
}

TEST_CASE("csv exports") {
  Spectrum s({1.0, -1.0});
  CHECK(spectrum_to_csv(s).rfind("index,value\n0,1\n1,-1\n", 0) == 0);
  EmpiricalMeasure mu({{0.5, 2.0}});
  CHECK(measure_to_csv(mu) == "location,weight\n0.5,2\n");
}
