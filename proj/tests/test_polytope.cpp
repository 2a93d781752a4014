#include <doctest.h>

#include <cmath>

#include "rmt/polytope.hpp"
#include "rmt/series.hpp"

using namespace rmt;

TEST_CASE("doubled-cycle polytope has volume alpha/2") {
  Polytope p{{{2, 2}}, {1.0}};
  VolumeResult v = polytope_volume(p);
  CHECK(v.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(v.exact == "1/2");
  CHECK_FALSE(v.rank_deficient);

  Polytope p3{{{2, 2}}, {3.0}};
  CHECK(polytope_volume(p3).value == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("unit-coefficient simplex volume alpha^{E-1}/(E-1)!") {
  for (int e = 2; e <= 6; ++e) {
    Polytope p{{std::vector<int>(e, 1)}, {1.0}};
    double fact = 1.0;
    for (int i = 2; i < e; ++i) fact *= i;
    CHECK(polytope_volume(p).value == doctest::Approx(1.0 / fact).epsilon(1e-12));
  }
  Polytope scaled{{std::vector<int>(4, 1)}, {2.0}};
  CHECK(polytope_volume(scaled).value == doctest::Approx(8.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("degenerate right-hand sides") {
  // alpha -> 0 collapses the region to a point: no volume in dimension >= 1
  Polytope p{{{2, 2}}, {0.0}};
  CHECK(polytope_volume(p).value == 0.0);
}

TEST_CASE("rank deficiency is flagged") {
  Polytope p{{{1, 1}, {1, 1}}, {1.0, 1.0}};
  VolumeResult v = polytope_volume(p);
  CHECK(v.rank_deficient);
  CHECK(v.value == 0.0);
  // and an inconsistent pair is infeasible the same way
  Polytope q{{{1, 1}, {1, 1}}, {1.0, 2.0}};
  CHECK(polytope_volume(q).rank_deficient);
}

TEST_CASE("monte carlo agrees with the exact volume within 3 sigma") {
  std::vector<Polytope> cases = {
      {{{2, 2}}, {1.0}},
      {{std::vector<int>(5, 1)}, {1.0}},
      {{{2, 2, 2, 2, 1, 1, 0}, {0, 0, 0, 0, 1, 1, 2}}, {1.0, 1.0}},
  };
  int seed = 0;
  for (const Polytope& p : cases) {
    VolumeResult v = polytope_volume(p);
    McVolume mc = polytope_volume_mc(p, 300000, 1234 + seed++);
    CHECK(std::fabs(mc.value - v.value) <= 3.0 * mc.std_error);
  }
}

TEST_CASE("exponential integral: zero rates reduce exactly to the volume") {
  Polytope p{{{2, 2, 2}}, {1.0}};
  VolumeResult v = polytope_volume(p);
  VolumeResult e = exp_linear_integral(p, {0.0, 0.0, 0.0});
  CHECK(e.value == v.value);
}

TEST_CASE("exponential integral: doubled cycle with equal rates") {
  // both edges carry weight w1 + w2 = alpha/2, so the integrand is constant
  for (double r : {0.5, 1.0, 3.0}) {
    Polytope p{{{2, 2}}, {1.0}};
    VolumeResult e = exp_linear_integral(p, {r, r});
    CHECK(e.value == doctest::Approx(0.5 * std::exp(-r * 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("exponential integral: distinct rates against the closed form") {
  // simplex {w >= 0, sum w = 1}: chart eliminates w_0;
  // closed form sum_i e^{-b_i} / prod_{j != i} (b_j - b_i)
  Polytope p{{std::vector<int>(4, 1)}, {1.0}};
  std::vector<double> rates = {0.5, 1.0, 2.0, 4.0};
  double expect = 0.0;
  for (int i = 0; i < 4; ++i) {
    double prod = 1.0;
    for (int j = 0; j < 4; ++j)
      if (j != i) prod *= rates[j] - rates[i];
    expect += std::exp(-rates[i]) / prod;
  }
  VolumeResult e = exp_linear_integral(p, rates);
  CHECK(e.value == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("exponential integral is continuous at degenerate rates") {
  Polytope p{{std::vector<int>(3, 1)}, {1.0}};
  double exact_equal = exp_linear_integral(p, {1.0, 1.0, 1.0}).value;
  double nearby = exp_linear_integral(p, {1.0, 1.0 + 1e-9, 1.0 - 1e-9}).value;
  CHECK(std::fabs(exact_equal - nearby) <= 1e-8);
  // against the closed form for equal rates: e^{-1} * vol = e^{-1} / 2
  CHECK(exact_equal == doctest::Approx(std::exp(-1.0) * 0.5).epsilon(1e-12));
}

TEST_CASE("exponential integral decays monotonically in the rates") {
  Polytope p{{{2, 2, 2, 2, 1, 1, 0}, {0, 0, 0, 0, 1, 1, 2}}, {1.0, 1.0}};
  double prev = polytope_volume(p).value;
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    std::vector<double> rates(7, t);
    double val = exp_linear_integral(p, rates).value;
    CHECK(val < prev);
    CHECK(val > 0.0);
    prev = val;
  }
}

TEST_CASE("large spread rates stay finite and positive (bisection path)") {
  Polytope p{{std::vector<int>(4, 1)}, {1.0}};
  VolumeResult e = exp_linear_integral(p, {0.0, 10.0, 25.0, 60.0});
  CHECK(e.value > 0.0);
  CHECK(e.value < polytope_volume(p).value);
}

TEST_CASE("diagram polytope assembly validates alpha") {
  auto cat = enumerate_diagrams(1, 1);
  CHECK_THROWS(diagram_polytope(cat[0], {0.0}));
  CHECK_THROWS(diagram_polytope(cat[0], {1.0, 1.0}));
  Polytope p = diagram_polytope(cat[0], {1.0});
  CHECK(p.variables() == 2);
  CHECK(p.constraints() == 1);
}
