// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Heavy Monte Carlo criteria parallelize replicates over
// per-index result slots, so results do not depend on the thread count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rmt/diagrams.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/measure.hpp"
#include "rmt/moments.hpp"
#include "rmt/paths.hpp"
#include "rmt/polytope.hpp"
#include "rmt/reference.hpp"
#include "rmt/rng.hpp"
#include "rmt/series.hpp"
#include "rmt/spectra.hpp"
#include "rmt/threading.hpp"

using namespace rmt;

namespace {

int g_threads = 2;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += "    failed: " + what + "\n";
    }
  }
  void note(const std::string& what) { detail += "    " + what + "\n"; }
};

std::shared_ptr<const GraphSpec> complete(int n) {
  return std::make_shared<const GraphSpec>(GraphSpec::complete(n));
}

struct Stats {
  double mean = 0.0, se = 0.0;
};

Stats mean_se(const std::vector<double>& xs) {
  Stats s;
  for (double x : xs) s.mean += x;
  s.mean /= xs.size();
  if (xs.size() > 1) {
    double v = 0.0;
    for (double x : xs) v += (x - s.mean) * (x - s.mean);
    s.se = std::sqrt(v / (xs.size() - 1) / xs.size());
  }
  return s;
}

double quantile(std::vector<double> xs, double q) {
  std::sort(xs.begin(), xs.end());
  double pos = q * (xs.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] * (1.0 - (pos - lo)) + xs[hi] * (pos - lo);
}

char buf[512];

// 1. Non-backtracking identity on small graphs, 20 sign matrices each, n <= 6.
Outcome criterion1() {
  Outcome out;
  std::vector<std::pair<std::string, GraphSpec>> graphs;
  graphs.emplace_back("K3", GraphSpec::complete(3));
  graphs.emplace_back("K4", GraphSpec::complete(4));
  graphs.emplace_back("K5", GraphSpec::complete(5));
  graphs.emplace_back("C4", GraphSpec::band(4, 1));
  graphs.emplace_back("Band(8,2)", GraphSpec::band(8, 2));
  EntryDistribution dz(EntryKind::Zero, EntryTarget::Diagonal);
  EntryDistribution off(EntryKind::RademacherSign, EntryTarget::OffDiagonal);
  double worst = 0.0;
  for (auto& [name, graph] : graphs) {
    auto g = std::make_shared<const GraphSpec>(graph);
    for (int seed = 0; seed < 20; ++seed) {
      HermitianMatrix h = sample_matrix(g, dz, off, replicate_seed(101, seed));
      for (int n = 1; n <= 6; ++n)
        worst = std::max(worst, verify_nb_identity(h, g->connectivity(), n).max_abs_error);
    }
  }
  std::snprintf(buf, sizeof buf, "max |matrix-recurrence - path-sum| = %.3e (bound 1e-10)", worst);
  out.note(buf);
  out.require(worst <= 1e-10, "identity discrepancy above 1e-10");
  return out;
}

// 2. Semicircle trace moments, Rademacher Wigner N = 1000, 200 replicates.
Outcome criterion2() {
  Outcome out;
  const int n = 1000, reps = 200;
  auto g = complete(n);
  EntryDistribution dz(EntryKind::Zero, EntryTarget::Diagonal);
  EntryDistribution off(EntryKind::RademacherSign, EntryTarget::OffDiagonal);
  std::vector<std::vector<double>> rows(reps);
  parallel_for_index(reps, g_threads, [&](int r) {
    HermitianMatrix h = sample_matrix(g, dz, off, replicate_seed(1, r));
    rows[r] = trace_power_moments(h, n - 1, 8);
  });
  for (int m = 2; m <= 8; m += 2) {
    std::vector<double> xs(reps);
    for (int r = 0; r < reps; ++r) xs[r] = rows[r][m];
    Stats st = mean_se(xs);
    double ref = semicircle_moment(m).value();
    std::snprintf(buf, sizeof buf, "m=%d mean=%.8f ref=%.8f |diff|=%.3e 4SE=%.3e", m, st.mean,
                  ref, std::fabs(st.mean - ref), 4 * st.se);
    out.note(buf);
    out.require(std::fabs(st.mean - ref) <= 4 * st.se,
                "m=" + std::to_string(m) + " outside 4 SE of the Catalan value");
  }
  if (!out.pass)
    out.note("note: for sign entries tr H^2 is deterministic and the O(1/N) finite-size bias "
             "exceeds 4 SE at N=1000, R=200; see the repository notes");
  return out;
}

// 3. Modified-moment vanishing and N-shrink.
Outcome criterion3() {
  Outcome out;
  const int reps = 200;
  auto run = [&](int n) {
    auto g = complete(n);
    EntryDistribution dz(EntryKind::Zero, EntryTarget::Diagonal);
    EntryDistribution off(EntryKind::RademacherSign, EntryTarget::OffDiagonal);
    PolynomialFamily fam = PolynomialFamily::non_backtracking(n - 1);
    std::vector<std::vector<double>> rows(reps);
    parallel_for_index(reps, g_threads, [&](int r) {
      HermitianMatrix h = sample_matrix(g, dz, off, replicate_seed(2, r));
      rows[r] = modified_trace_moments(h, n - 1, fam, 6);
    });
    return rows;
  };
  auto rows1000 = run(1000);
  auto rows250 = run(250);
  double peak1000 = 0.0, peak250 = 0.0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<double> xs(reps), ys(reps);
    for (int r = 0; r < reps; ++r) {
      xs[r] = rows1000[r][n];
      ys[r] = rows250[r][n];
    }
    Stats st = mean_se(xs);
    Stats st250 = mean_se(ys);
    peak1000 = std::max(peak1000, std::fabs(st.mean));
    peak250 = std::max(peak250, std::fabs(st250.mean));
    std::snprintf(buf, sizeof buf, "n=%d mean(N=1000)=%.3e 4SE=%.3e mean(N=250)=%.3e", n,
                  st.mean, 4 * st.se, st250.mean);
    out.note(buf);
    // exact-zero orders are floating-point zeros; 1e-12 covers rounding
    out.require(std::fabs(st.mean) <= 4 * st.se + 1e-12,
                "n=" + std::to_string(n) + " mean not within 4 SE of zero");
  }
  std::snprintf(buf, sizeof buf, "peak |mean|: N=250 %.3e vs N=1000 %.3e (shrink %.2fx)",
                peak250, peak1000, peak250 / peak1000);
  out.note(buf);
  out.require(peak250 >= 2.0 * peak1000, "point estimate did not shrink 2x from N=250 to N=1000");
  return out;
}

// 4. Interlacing bound after truncation, 50 pairs at N = 200.
Outcome criterion4() {
  Outcome out;
  const int n = 200, pairs = 50;
  auto g = complete(n);
  EntryDistribution dz(EntryKind::Zero, EntryTarget::Diagonal);
  EntryDistribution off(EntryKind::RealGaussian, EntryTarget::OffDiagonal);
  std::vector<double> slack(pairs);
  parallel_for_index(pairs, g_threads, [&](int i) {
    HermitianMatrix h = sample_matrix(g, dz, off, replicate_seed(3, i));
    double threshold = 0.8 + 2.2 * i / (pairs - 1.0);
    TruncationResult t = truncate_matrix(h, threshold);
    Spectrum sh = eigenvalues(h);
    Spectrum st = eigenvalues(t.matrix);
    double dist = sup_cdf_distance(empirical_measure(sh, 1.0), empirical_measure(st, 1.0));
    int rank = numerical_rank_of_difference(h, t.matrix);
    slack[i] = static_cast<double>(rank) / n - dist;
  });
  double worst = 1e300;
  for (double s : slack) worst = std::min(worst, s);
  std::snprintf(buf, sizeof buf, "min (rank/N - sup-CDF distance) = %.3e over %d pairs", worst,
                pairs);
  out.note(buf);
  out.require(worst >= -1e-12, "interlacing bound violated beyond 1e-12");
  return out;
}

// 5. Sonin inequality on Gauss-Hermite measures with 2..8 nodes.
Outcome criterion5() {
  Outcome out;
  for (int k = 2; k <= 8; ++k) {
    EmpiricalMeasure gh = gauss_hermite_measure(k);
    int matched = 2 * k - 1;  // quadrature matches gaussian moments below 2k
    SoninReport rep = sonin_bound_check(gh, matched);
    std::snprintf(buf, sizeof buf, "nodes=%d matched=%d observed=%.6f bound=%.6f", k, matched,
                  rep.observed, rep.bound);
    out.note(buf);
    out.require(rep.holds, "bound violated at " + std::to_string(k) + " nodes");
    if (k == 2)
      out.require(std::fabs(rep.observed - 0.3413447) <= 1e-3,
                  "2-node observed gap is not ~0.3413");
  }
  return out;
}

// 6. Erdos-Turan-type bracket ratio, frozen regression constant.
Outcome criterion6() {
  Outcome out;
  // calibration run (deterministic quadrature + closed forms) measured a
  // global maximum ratio of 0.0333; frozen regression bound:
  const double kFrozenRatio = 0.05;
  double global = 0.0;
  for (int atoms : {1000, 10000, 100000}) {
    EmpiricalMeasure sc = semicircle_quadrature(atoms);
    for (int n0 : {5, 10, 20}) {
      for (int i = -24; i <= 24; ++i) {
        double xi = i / 20.0;
        EtReport rep = erdos_turan_bracket(sc, xi, n0);
        global = std::max(global, rep.discrepancy / rep.bracket);
      }
    }
  }
  std::snprintf(buf, sizeof buf, "max discrepancy/bracket = %.6f (frozen bound %.2f)", global,
                kFrozenRatio);
  out.note(buf);
  out.require(global <= kFrozenRatio, "ratio exceeds the frozen regression constant");
  return out;
}

// 7. Edge universality: KS comparisons at N = 400, 2000 replicates.
Outcome criterion7() {
  Outcome out;
  const int n = 400, reps = 2000;
  auto g = complete(n);
  EntryDistribution dz(EntryKind::Zero, EntryTarget::Diagonal);
  EntryDistribution rad(EntryKind::RademacherSign, EntryTarget::OffDiagonal);
  EntryDistribution gau(EntryKind::RealGaussian, EntryTarget::OffDiagonal);
  EntryDistribution cgs(EntryKind::ComplexGaussian, EntryTarget::OffDiagonal);
  std::vector<double> la(reps), lb(reps), lc(reps);
  parallel_for_index(reps, g_threads, [&](int r) {
    la[r] = edge_point_process(eigenvalues(sample_matrix(g, dz, rad, replicate_seed(11, 3 * r))),
                               EdgeMode::WignerEdge)
                .max_location();
    lb[r] = edge_point_process(
                eigenvalues(sample_matrix(g, dz, gau, replicate_seed(11, 3 * r + 1))),
                EdgeMode::WignerEdge)
                .max_location();
    lc[r] = edge_point_process(
                eigenvalues(sample_matrix(g, dz, cgs, replicate_seed(11, 3 * r + 2))),
                EdgeMode::WignerEdge)
                .max_location();
  });
  double threshold = 1.36 * std::sqrt(2.0 / reps) * 1.5;
  double ks_real = ks_two_sample(la, lb);
  double ks_beta = ks_two_sample(lb, lc);
  Stats mc = mean_se(lc);
  std::snprintf(buf, sizeof buf,
                "KS(sign, gauss) = %.5f, KS(real, complex) = %.5f, threshold = %.5f", ks_real,
                ks_beta, threshold);
  out.note(buf);
  std::snprintf(buf, sizeof buf, "mean rescaled largest eigenvalue (complex) = %.4f", mc.mean);
  out.note(buf);
  out.require(ks_real <= threshold, "same-symmetry-class KS above threshold");
  out.require(ks_beta > threshold, "real vs complex KS did not separate");
  out.require(mc.mean >= -2.2 && mc.mean <= -1.4,
              "complex-ensemble mean outside the regression band [-2.2, -1.4]");
  if (ks_real > threshold)
    out.note("note: at N=400 the sign/gaussian edge laws still differ by a finite-size shift "
             "larger than the threshold; see the repository notes");
  return out;
}

// 8. Diagram catalog witnesses and invariants.
Outcome criterion8() {
  Outcome out;
  std::vector<Diagram> s1 = enumerate_diagrams(1, 1);
  out.require(s1.size() == 1, "D_1(1) != 1");
  if (s1.size() == 1) {
    const Diagram& d = s1[0];
    out.require(d.vertex_count() == 2 && d.edge_count() == 2,
                "s=1 witness is not the doubled 2-cycle");
    out.require(!d.orientable(), "s=1 witness should be non-orientable");
  }
  std::snprintf(buf, sizeof buf, "D_1(1) = %zu", s1.size());
  out.note(buf);

  // the two one-walk genus-2 classes from the figures
  std::vector<Diagram> s2 = enumerate_diagrams(1, 2);
  std::set<std::string> keys2;
  int count2 = 0;
  for (const Diagram& d : s2)
    if (d.genus_parameter() == 2) {
      keys2.insert(d.canonical_key());
      ++count2;
    }
  Diagram torus = diagram_from_walks({0}, {{{0, 1}, {1, 0}, {2, 1}, {0, 0}, {1, 1}, {2, 0}}});
  Diagram crosscaps =
      diagram_from_walks({0}, {{{0, 0}, {0, 0}, {1, 1}, {2, 1}, {2, 1}, {1, 0}}});
  out.require(keys2.count(torus.canonical_key()) == 1, "torus class missing at s=2");
  out.require(keys2.count(crosscaps.canonical_key()) == 1, "two-crosscap class missing at s=2");
  out.require(torus.orientable() && !crosscaps.orientable(), "s=2 orientability flags wrong");
  std::snprintf(buf, sizeof buf, "D_1(2) = %d (torus + two-crosscap classes present)", count2);
  out.note(buf);

  // the printed two-walk polytope: tails, a loop pocket, a shared cycle
  Diagram fig = diagram_from_walks(
      {0, 5}, {{{0, 1}, {1, 2}, {2, 2}, {2, 2}, {1, 1}, {3, 3}, {4, 4}, {5, 3}, {3, 1}, {0, 0}},
               {{6, 4}, {4, 3}, {5, 4}, {6, 5}}});
  out.require(fig.traversal_counts()[0] == std::vector<int>{2, 2, 2, 2, 1, 1, 0},
              "first walk constraint row mismatch");
  out.require(fig.traversal_counts()[1] == std::vector<int>{0, 0, 0, 0, 1, 1, 2},
              "second walk constraint row mismatch");
  out.require(fig.genus_parameter() == 3 && fig.vertex_count() == 6 && fig.edge_count() == 7,
              "figure diagram invariants mismatch");
  out.note("two-walk figure polytope: 2w1+2w2+2w3+2w4+w5+w6 = a1, w5+w6+2w7 = a2");

  // catalog-wide invariants
  for (int k = 1; k <= 2; ++k) {
    std::vector<Diagram> cat = enumerate_diagrams(k, 3);
    std::set<std::string> all;
    for (const Diagram& d : cat) all.insert(d.canonical_key());
    for (const Diagram& d : cat) {
      std::set<int> verts;
      std::vector<int> mult(d.edge_count(), 0);
      std::vector<int> deg;
      for (const auto& e : d.edges()) {
        verts.insert(e.u);
        verts.insert(e.v);
        int m = std::max(e.u, e.v);
        if (static_cast<int>(deg.size()) <= m) deg.resize(m + 1, 0);
        deg[e.u] += e.is_loop() ? 2 : 1;
        if (!e.is_loop()) deg[e.v] += 1;
      }
      for (int r = 0; r < k; ++r)
        for (const DiagramStep& st : d.walks()[r]) mult[st.edge] += 1;
      out.require(d.genus_parameter() == k + d.edge_count() - static_cast<int>(verts.size()),
                  "s != k + E - V on a catalog entry");
      for (int m : mult) out.require(m == 2, "edge multiplicity != 2 on a catalog entry");
      for (int dg : deg) out.require(dg <= 3, "vertex degree > 3 on a catalog entry");
      if (d.orientable())
        out.require(all.count(d.canonical_key()) == 1, "orientable entry missing from catalog");
    }
  }
  out.note("catalog invariants verified for k in {1,2}, s <= 3");
  return out;
}

// 9. Polytope volumes: exact vs Monte Carlo, zero-rate reduction, series sum.
Outcome criterion9() {
  Outcome out;
  int checked = 0;
  for (int k = 1; k <= 2; ++k) {
    std::vector<Diagram> cat = enumerate_diagrams(k, 3);
    std::vector<double> alpha(k, 1.0);
    int idx = 0;
    for (const Diagram& d : cat) {
      Polytope p = diagram_polytope(d, alpha);
      VolumeResult v = polytope_volume(p);
      McVolume mc = polytope_volume_mc(p, 200000, 9000 + 37 * k + idx++);
      double tol = 3.0 * mc.std_error + 1e-12;
      if (std::fabs(mc.value - v.value) > tol) {
        std::snprintf(buf, sizeof buf, "k=%d s=%d E=%d: exact %.6g vs MC %.6g +- %.2g", k,
                      d.genus_parameter(), d.edge_count(), v.value, mc.value, mc.std_error);
        out.require(false, std::string("volume/MC mismatch: ") + buf);
      }
      VolumeResult e0 = exp_linear_integral(p, std::vector<double>(p.variables(), 0.0));
      out.require(std::fabs(e0.value - v.value) <= 1e-12,
                  "zero-rate exponential integral differs from the volume");
      ++checked;
    }
    // singleton configuration: series equals the volume sum
    PointConfig pc;
    for (int r = 0; r < k; ++r) pc.points.push_back({0.0});
    SeriesResult series = ad_transform_series(k, pc, alpha, 1, 3);
    double vol_sum = 0.0;
    for (const Diagram& d : cat) {
      int copies = 1;
      if (k == 2 && d.canonical_key_permuted({0, 1}) != d.canonical_key_permuted({1, 0}))
        copies = 2;
      vol_sum += copies * polytope_volume(diagram_polytope(d, alpha)).value;
    }
    out.require(std::fabs(series.value - vol_sum) <= 1e-12 * std::max(1.0, vol_sum),
                "singleton series != sum of polytope volumes for k=" + std::to_string(k));
  }
  std::snprintf(buf, sizeof buf, "%d catalog polytopes verified against hit-or-miss MC", checked);
  out.note(buf);
  return out;
}

// 10. Band-scan qualitative crossover at N = 1000.
Outcome criterion10() {
  Outcome out;
  const int n = 1000, reps = 200;
  EntryDistribution dz(EntryKind::Zero, EntryTarget::Diagonal);
  EntryDistribution off(EntryKind::RademacherSign, EntryTarget::OffDiagonal);
  auto iqr_for = [&](double theta) {
    int w = std::min(static_cast<int>(std::llround(std::pow(static_cast<double>(n), theta))),
                     n / 2 - 1);
    auto g = std::make_shared<const GraphSpec>(GraphSpec::band(n, w));
    std::vector<double> lam(reps);
    parallel_for_index(reps, g_threads, [&](int r) {
      HermitianMatrix h =
          sample_matrix(g, dz, off, replicate_seed(77 + static_cast<int>(100 * theta), r));
      lam[r] = edge_point_process(eigenvalues(h), EdgeMode::BandEdge, w).max_location();
    });
    return quantile(lam, 0.75) - quantile(lam, 0.25);
  };
  double full = iqr_for(1.0);  // W clamps to N/2 - 1
  double at09 = iqr_for(0.9);
  double at05 = iqr_for(0.5);
  std::snprintf(buf, sizeof buf,
                "IQR: full=%.4f theta=0.9: %.4f (ratio %.2f) theta=0.5: %.4f (ratio %.2f)", full,
                at09, at09 / full, at05, at05 / full);
  out.note(buf);
  out.require(at09 / full <= 2.0 && at09 / full >= 0.5, "theta=0.9 IQR not within 2x of full");
  out.require(at05 / full >= 3.0, "theta=0.5 IQR does not exceed full by 3x");
  if (at05 / full < 3.0)
    out.note("note: calibration runs measure ~2.2-2.5x inflation at N=1000; the crossover is "
             "present but below the 3x bar at this size; see the repository notes");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  g_threads = default_threads();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"non-backtracking identity", criterion1},
      {"semicircle trace moments", criterion2},
      {"modified-moment vanishing", criterion3},
      {"interlacing bound", criterion4},
      {"sonin inequality", criterion5},
      {"erdos-turan bracket ratio", criterion6},
      {"edge universality (KS)", criterion7},
      {"diagram catalog", criterion8},
      {"polytope volumes", criterion9},
      {"band-scan crossover", criterion10},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && !selected.count(static_cast<int>(i) + 1)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out = criteria[i].second();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %zu: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), dt);
    std::fputs(out.detail.c_str(), stdout);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  if (failures) std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
