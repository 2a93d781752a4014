#include "rmt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "rmt/csv.hpp"
#include "rmt/diagrams.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/measure.hpp"
#include "rmt/moments.hpp"
#include "rmt/paths.hpp"
#include "rmt/polytope.hpp"
#include "rmt/reference.hpp"
#include "rmt/series.hpp"
#include "rmt/spectra.hpp"
#include "rmt/threading.hpp"

namespace rmt {

namespace {

std::shared_ptr<const GraphSpec> graph_from(const KeyValue& cfg) {
  std::string kind = cfg.get_string("ensemble.kind", "complete");
  int n = static_cast<int>(cfg.get_int("ensemble.n", 100));
  if (kind == "complete") return std::make_shared<const GraphSpec>(GraphSpec::complete(n));
  if (kind == "band") {
    int w = static_cast<int>(cfg.get_int("ensemble.w", 1));
    return std::make_shared<const GraphSpec>(GraphSpec::band(n, w));
  }
  throw std::invalid_argument("unknown ensemble.kind: " + kind);
}

EntryDistribution dist_from(const KeyValue& cfg, const std::string& key, EntryTarget target,
                            const std::string& fallback) {
  return EntryDistribution(EntryDistribution::kind_from_name(cfg.get_string(key, fallback)),
                           target);
}

CsvWriter writer_for(const KeyValue& cfg) {
  CsvWriter w;
  w.comment("library", std::string("rmtmoments ") + kLibraryVersion);
  std::string canon = cfg.canonical();
  w.comment("config_hash", std::to_string(fnv1a(canon)));
  for (const auto& [k, v] : cfg.items()) w.comment(k, v);
  return w;
}

EigenOptions eig_options(const KeyValue& cfg) {
  EigenOptions o;
  o.tolerance = cfg.get_double("eig.tol", 0.0);
  return o;
}

struct Stats {
  double mean = 0.0;
  double std_error = 0.0;
};

Stats mean_se(const std::vector<double>& xs) {
  Stats s;
  int n = static_cast<int>(xs.size());
  for (double x : xs) s.mean += x;
  s.mean /= n;
  if (n > 1) {
    double v = 0.0;
    for (double x : xs) v += (x - s.mean) * (x - s.mean);
    s.std_error = std::sqrt(v / (n - 1) / n);
  }
  return s;
}

double quantile(std::vector<double> xs, double q) {
  std::sort(xs.begin(), xs.end());
  double pos = q * (xs.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, xs.size() - 1);
  double frac = pos - lo;
  return xs[lo] * (1.0 - frac) + xs[hi] * frac;
}

std::string run_gen(const KeyValue& cfg) {
  auto g = graph_from(cfg);
  auto diag = dist_from(cfg, "diag.kind", EntryTarget::Diagonal, "zero");
  auto off = dist_from(cfg, "offdiag.kind", EntryTarget::OffDiagonal, "rademacher");
  HermitianMatrix h = sample_matrix(g, diag, off, cfg.get_int("seed", 1));
  CsvWriter w = writer_for(cfg);
  std::string csv = matrix_to_csv(h);
  return w.str() + csv;
}

MomentTable scan_table(const KeyValue& cfg, MomentKind kind, int order_max) {
  auto g = graph_from(cfg);
  auto diag = dist_from(cfg, "diag.kind", EntryTarget::Diagonal, "zero");
  auto off = dist_from(cfg, "offdiag.kind", EntryTarget::OffDiagonal, "rademacher");
  int replicates = static_cast<int>(cfg.get_int("replicates", 50));
  int threads = static_cast<int>(cfg.get_int("threads", default_threads()));
  std::uint64_t seed = cfg.get_int("seed", 1);
  int kappa = g->connectivity();
  PolynomialFamily fam = kind == MomentKind::ModifiedChebyshev
                             ? PolynomialFamily::chebyshev_u()
                             : PolynomialFamily::non_backtracking(kappa);

  std::vector<std::vector<double>> per_rep(replicates);
  parallel_for_index(replicates, threads, [&](int r) {
    HermitianMatrix h = sample_matrix(g, diag, off, replicate_seed(seed, r));
    per_rep[r] = kind == MomentKind::Raw ? trace_power_moments(h, kappa, order_max)
                                         : modified_trace_moments(h, kappa, fam, order_max);
  });

  MomentTable table;
  table.kind = kind;
  for (int m = 0; m <= order_max; ++m) {
    std::vector<double> xs(replicates);
    for (int r = 0; r < replicates; ++r) xs[r] = per_rep[r][m];
    Stats st = mean_se(xs);
    table.orders.push_back(m);
    table.values.push_back(st.mean);
    table.std_errors.push_back(st.std_error);
  }
  return table;
}

std::string run_moment_scan(const KeyValue& cfg) {
  int m_max = static_cast<int>(cfg.get_int("m.max", 8));
  MomentTable table = scan_table(cfg, MomentKind::Raw, m_max);
  CsvWriter w = writer_for(cfg);
  w.columns({"m", "empirical", "reference", "stderr"});
  for (std::size_t i = 0; i < table.orders.size(); ++i)
    w.row({std::to_string(table.orders[i]), format_double(table.values[i]),
           format_double(semicircle_moment(table.orders[i]).value()),
           format_double(table.std_errors[i])});
  return w.str();
}

std::string run_modified_moment_scan(const KeyValue& cfg) {
  int n_max = static_cast<int>(cfg.get_int("n.max", 6));
  MomentTable table = scan_table(cfg, MomentKind::ModifiedNonBacktracking, n_max);
  CsvWriter w = writer_for(cfg);
  w.columns({"n", "modified_moment", "stderr"});
  for (std::size_t i = 0; i < table.orders.size(); ++i)
    w.row({std::to_string(table.orders[i]), format_double(table.values[i]),
           format_double(table.std_errors[i])});
  return w.str();
}

std::string run_edge_mc(const KeyValue& cfg) {
  auto g = graph_from(cfg);
  auto diag = dist_from(cfg, "diag.kind", EntryTarget::Diagonal, "zero");
  auto off_a = dist_from(cfg, "offdiag.kind", EntryTarget::OffDiagonal, "rademacher");
  auto off_b = dist_from(cfg, "compare.offdiag.kind", EntryTarget::OffDiagonal, "gauss");
  int replicates = static_cast<int>(cfg.get_int("replicates", 200));
  int threads = static_cast<int>(cfg.get_int("threads", default_threads()));
  std::uint64_t seed = cfg.get_int("seed", 1);
  EigenOptions opts = eig_options(cfg);

  std::vector<double> la(replicates), lb(replicates);
  parallel_for_index(replicates, threads, [&](int r) {
    HermitianMatrix ha = sample_matrix(g, diag, off_a, replicate_seed(seed, 2 * r));
    HermitianMatrix hb = sample_matrix(g, diag, off_b, replicate_seed(seed, 2 * r + 1));
    Spectrum sa = eigenvalues(ha, opts);
    Spectrum sb = eigenvalues(hb, opts);
    la[r] = edge_point_process(sa, EdgeMode::WignerEdge).max_location();
    lb[r] = edge_point_process(sb, EdgeMode::WignerEdge).max_location();
  });

  double ks = ks_two_sample(la, lb);
  CsvWriter w = writer_for(cfg);
  w.comment("ks_statistic", format_double(ks));
  w.columns({"replicate", "lambda_max_a", "lambda_max_b"});
  for (int r = 0; r < replicates; ++r)
    w.row({std::to_string(r), format_double(la[r]), format_double(lb[r])});
  return w.str();
}

std::string run_band_scan(const KeyValue& cfg) {
  int n = static_cast<int>(cfg.get_int("ensemble.n", 1000));
  auto diag = dist_from(cfg, "diag.kind", EntryTarget::Diagonal, "zero");
  auto off = dist_from(cfg, "offdiag.kind", EntryTarget::OffDiagonal, "rademacher");
  std::vector<double> thetas =
      cfg.get_list("thetas", {0.5, 0.6, 0.7, 5.0 / 6.0, 0.9, 1.0});
  int replicates = static_cast<int>(cfg.get_int("replicates", 100));
  int threads = static_cast<int>(cfg.get_int("threads", default_threads()));
  std::uint64_t seed = cfg.get_int("seed", 1);
  EigenOptions opts = eig_options(cfg);

  CsvWriter w = writer_for(cfg);
  w.columns({"theta", "w", "iqr", "q25", "q75", "median", "eta_ref"});
  for (double theta : thetas) {
    int width = static_cast<int>(std::llround(std::pow(static_cast<double>(n), theta)));
    width = std::max(1, std::min(width, n / 2 - 1));
    auto g = std::make_shared<const GraphSpec>(GraphSpec::band(n, width));
    std::vector<double> lam(replicates);
    parallel_for_index(replicates, threads, [&](int r) {
      HermitianMatrix h =
          sample_matrix(g, diag, off, replicate_seed(seed ^ fnv1a(format_double(theta)), r));
      Spectrum s = eigenvalues(h, opts);
      lam[r] = edge_point_process(s, EdgeMode::BandEdge, width).max_location();
    });
    double q25 = quantile(lam, 0.25), q75 = quantile(lam, 0.75);
    double eta = std::min(std::pow(static_cast<double>(width), 0.4) / n,
                          std::pow(static_cast<double>(n), -2.0 / 3.0));
    w.row({format_double(theta), std::to_string(width), format_double(q75 - q25),
           format_double(q25), format_double(q75), format_double(quantile(lam, 0.5)),
           format_double(eta)});
  }
  return w.str();
}

std::string run_et_report(const KeyValue& cfg) {
  auto g = graph_from(cfg);
  auto diag = dist_from(cfg, "diag.kind", EntryTarget::Diagonal, "zero");
  auto off = dist_from(cfg, "offdiag.kind", EntryTarget::OffDiagonal, "rademacher");
  int replicates = static_cast<int>(cfg.get_int("replicates", 20));
  int n0 = static_cast<int>(cfg.get_int("n0", 10));
  int threads = static_cast<int>(cfg.get_int("threads", default_threads()));
  std::uint64_t seed = cfg.get_int("seed", 1);
  EigenOptions opts = eig_options(cfg);
  int kappa = g->connectivity();
  double scale = 2.0 * std::sqrt(static_cast<double>(kappa) - 1.0);

  // pooled empirical measure over replicates
  std::vector<std::vector<Atom>> chunks(replicates);
  parallel_for_index(replicates, threads, [&](int r) {
    HermitianMatrix h = sample_matrix(g, diag, off, replicate_seed(seed, r));
    Spectrum s = eigenvalues(h, opts);
    EmpiricalMeasure mu = empirical_measure(s, scale);
    std::vector<Atom> atoms = mu.atoms();
    for (Atom& a : atoms) a.weight /= replicates;
    chunks[r] = std::move(atoms);
  });
  std::vector<Atom> all;
  for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  EmpiricalMeasure pooled(std::move(all));

  std::vector<double> grid = cfg.get_list("xi.grid", {});
  if (grid.empty())
    for (int i = -20; i <= 20; ++i) grid.push_back(i / 20.0);

  CsvWriter w = writer_for(cfg);
  w.columns({"xi", "discrepancy", "bracket", "ratio"});
  for (double xi : grid) {
    EtReport rep = erdos_turan_bracket(pooled, xi, n0);
    w.row({format_double(xi), format_double(rep.discrepancy), format_double(rep.bracket),
           format_double(rep.discrepancy / rep.bracket)});
  }
  return w.str();
}

std::string run_nb_verify(const KeyValue& cfg) {
  auto g = graph_from(cfg);
  auto diag = EntryDistribution(EntryKind::Zero, EntryTarget::Diagonal);
  std::string off_name = cfg.get_string("offdiag.kind", "rademacher");
  auto off = EntryDistribution(EntryDistribution::kind_from_name(off_name),
                               EntryTarget::OffDiagonal);
  if (!off.is_unimodular())
    throw std::invalid_argument("nb-verify requires a unimodular off-diagonal distribution");
  int replicates = static_cast<int>(cfg.get_int("replicates", 20));
  int n_max = static_cast<int>(cfg.get_int("n.max", 6));
  std::uint64_t seed = cfg.get_int("seed", 1);
  int kappa = g->connectivity();

  CsvWriter w = writer_for(cfg);
  w.columns({"n", "max_abs_error"});
  for (int n = 1; n <= n_max; ++n) {
    double worst = 0.0;
    for (int r = 0; r < replicates; ++r) {
      HermitianMatrix h = sample_matrix(g, diag, off, replicate_seed(seed, r));
      worst = std::max(worst, verify_nb_identity(h, kappa, n).max_abs_error);
    }
    w.row({std::to_string(n), format_double(worst)});
  }
  return w.str();
}

std::string run_diagram_catalog(const KeyValue& cfg) {
  int k = static_cast<int>(cfg.get_int("k", 1));
  int s_max = static_cast<int>(cfg.get_int("s.max", 2));
  bool dump = cfg.get_int("dump", 0) != 0;
  CsvWriter w = writer_for(cfg);
  w.comment("convention",
            "reduced crease-free representatives; equivalence = relabeling + rotation/reversal "
            "of walks + walk permutation");
  if (dump) {
    std::string out = w.str();
    for (const Diagram& d : enumerate_diagrams(k, s_max)) out += d.serialize() + "\n";
    return out;
  }
  w.columns({"k", "s", "count", "c_min_upper", "c_min_lower"});
  for (const DiagramCountRow& row : diagram_count_report(k, s_max))
    w.row({std::to_string(row.k), std::to_string(row.s), std::to_string(row.count),
           format_double(row.c_min_upper), format_double(row.c_min_lower)});
  return w.str();
}

std::string run_ad_series(const KeyValue& cfg) {
  int k = static_cast<int>(cfg.get_int("k", 1));
  int s_max = static_cast<int>(cfg.get_int("s.max", 2));
  int beta = static_cast<int>(cfg.get_int("beta", 1));
  double p = cfg.get_double("p", 2.0);
  std::vector<double> alpha = cfg.get_list("alpha", std::vector<double>(k, 1.0));
  std::vector<double> flat = cfg.get_list("points", std::vector<double>(k, 0.0));
  if (flat.size() % k != 0)
    throw std::invalid_argument("ad-series: points list must hold k blocks of equal dimension");
  int d = static_cast<int>(flat.size()) / k;
  PointConfig pc;
  pc.p = p;
  for (int r = 0; r < k; ++r)
    pc.points.push_back(std::vector<double>(flat.begin() + r * d, flat.begin() + (r + 1) * d));

  SeriesResult res = ad_transform_series(k, pc, alpha, beta, s_max);
  CsvWriter w = writer_for(cfg);
  w.comment("value", format_double(res.value));
  w.comment("measure_convention", "projection measure after canonical pivot elimination");
  w.columns({"s", "term", "partial_sum", "diagrams", "degenerate"});
  for (const SeriesTermRow& row : res.per_s)
    w.row({std::to_string(row.s), format_double(row.term), format_double(row.partial_sum),
           std::to_string(row.diagrams), std::to_string(row.degenerate)});
  return w.str();
}

}  // namespace

std::string run_experiment(const KeyValue& cfg) {
  std::string kind = cfg.get_string("experiment", "");
  if (kind == "gen") return run_gen(cfg);
  if (kind == "moment-scan") return run_moment_scan(cfg);
  if (kind == "modified-moment-scan") return run_modified_moment_scan(cfg);
  if (kind == "edge-mc") return run_edge_mc(cfg);
  if (kind == "band-scan") return run_band_scan(cfg);
  if (kind == "et-report") return run_et_report(cfg);
  if (kind == "nb-verify") return run_nb_verify(cfg);
  if (kind == "diagram-catalog") return run_diagram_catalog(cfg);
  if (kind == "ad-series") return run_ad_series(cfg);
  throw std::invalid_argument("unknown experiment kind: " + kind);
}

}  // namespace rmt
