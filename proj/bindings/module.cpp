// Python bindings for the core operations: ensembles, spectra, moments,
// walk oracles, diagram catalog and polytope machinery.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <memory>

#include "rmt/diagrams.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/measure.hpp"
#include "rmt/moments.hpp"
#include "rmt/paths.hpp"
#include "rmt/polytope.hpp"
#include "rmt/reference.hpp"
#include "rmt/series.hpp"
#include "rmt/spectra.hpp"

namespace py = pybind11;
using namespace rmt;

namespace {

EntryDistribution dist(const std::string& kind, bool diagonal) {
  return EntryDistribution(EntryDistribution::kind_from_name(kind),
                           diagonal ? EntryTarget::Diagonal : EntryTarget::OffDiagonal);
}

std::shared_ptr<const GraphSpec> make_graph(const std::string& kind, int n, int w,
                                            const std::vector<std::vector<int>>& adjacency) {
  if (kind == "complete") return std::make_shared<const GraphSpec>(GraphSpec::complete(n));
  if (kind == "band") return std::make_shared<const GraphSpec>(GraphSpec::band(n, w));
  if (kind == "explicit")
    return std::make_shared<const GraphSpec>(GraphSpec::explicit_graph(adjacency));
  throw std::invalid_argument("graph kind must be complete | band | explicit");
}

py::array_t<std::complex<double>> matrix_to_numpy(const HermitianMatrix& h) {
  int n = h.dim();
  py::array_t<std::complex<double>> out({n, n});
  auto buf = out.mutable_unchecked<2>();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) buf(u, v) = h(u, v);
  return out;
}

py::dict measure_to_dict(const EmpiricalMeasure& mu) {
  std::vector<double> locs, weights;
  for (const Atom& a : mu.atoms()) {
    locs.push_back(a.location);
    weights.push_back(a.weight);
  }
  py::dict d;
  d["locations"] = py::cast(locs);
  d["weights"] = py::cast(weights);
  return d;
}

EmpiricalMeasure measure_from(const std::vector<double>& locations,
                              const std::vector<double>& weights) {
  if (locations.size() != weights.size())
    throw std::invalid_argument("locations and weights must have equal length");
  std::vector<Atom> atoms(locations.size());
  for (std::size_t i = 0; i < locations.size(); ++i) atoms[i] = {locations[i], weights[i]};
  return EmpiricalMeasure(std::move(atoms));
}

py::dict diagram_to_dict(const Diagram& d) {
  py::dict out;
  out["k"] = d.k();
  out["vertices"] = d.vertex_count();
  out["edges"] = d.edge_count();
  out["s"] = d.genus_parameter();
  out["orientable"] = d.orientable();
  out["traversal_counts"] = py::cast(d.traversal_counts());
  std::vector<std::vector<int>> walk_vertices;
  for (int r = 0; r < d.k(); ++r) walk_vertices.push_back(d.walk_vertices(r));
  out["walks"] = py::cast(walk_vertices);
  out["text"] = d.serialize();
  return out;
}

}  // namespace

PYBIND11_MODULE(_rmtmoments, m) {
  m.doc() = "moment-method toolkit for random matrix spectra";

  py::class_<GraphSpec, std::shared_ptr<GraphSpec>>(m, "GraphSpec")
      .def_property_readonly("vertex_count", &GraphSpec::vertex_count)
      .def_property_readonly("connectivity", &GraphSpec::connectivity)
      .def("has_edge", &GraphSpec::has_edge)
      .def("__repr__", &GraphSpec::describe);

  m.def(
      "build_graph",
      [](const std::string& kind, int n, int w, const std::vector<std::vector<int>>& adjacency) {
        return std::const_pointer_cast<GraphSpec>(make_graph(kind, n, w, adjacency));
      },
      py::arg("kind"), py::arg("n") = 0, py::arg("w") = 0,
      py::arg("adjacency") = std::vector<std::vector<int>>{});

  py::class_<HermitianMatrix>(m, "HermitianMatrix")
      .def_property_readonly("dim", &HermitianMatrix::dim)
      .def_property_readonly("is_real", &HermitianMatrix::is_real)
      .def("to_numpy", &matrix_to_numpy)
      .def("to_csv", &matrix_to_csv);

  m.def(
      "sample_matrix",
      [](const std::shared_ptr<GraphSpec>& g, const std::string& diag, const std::string& offdiag,
         std::uint64_t seed) {
        return sample_matrix(g, dist(diag, true), dist(offdiag, false), seed);
      },
      py::arg("graph"), py::arg("diag") = "zero", py::arg("offdiag") = "rademacher",
      py::arg("seed") = 1);

  m.def(
      "truncate_matrix",
      [](const HermitianMatrix& h, double threshold) {
        TruncationResult r = truncate_matrix(h, threshold);
        return py::make_tuple(std::move(r.matrix), r.changed_entries);
      },
      py::arg("matrix"), py::arg("threshold"));

  m.def(
      "eigenvalues",
      [](const HermitianMatrix& h, double tol) {
        EigenOptions opts;
        opts.tolerance = tol;
        return eigenvalues(h, opts).values();
      },
      py::arg("matrix"), py::arg("tolerance") = 0.0);

  m.def(
      "empirical_measure",
      [](const std::vector<double>& descending, double scale) {
        return measure_to_dict(empirical_measure(Spectrum(descending), scale));
      },
      py::arg("eigenvalues_descending"), py::arg("scale") = 1.0);

  m.def(
      "rescale",
      [](const std::vector<double>& locations, const std::vector<double>& weights, double center,
         double eta, double eps) {
        return measure_to_dict(rescale(measure_from(locations, weights), {center, eta, eps}));
      },
      py::arg("locations"), py::arg("weights"), py::arg("center"), py::arg("eta"),
      py::arg("eps"));

  m.def(
      "edge_point_process",
      [](const std::vector<double>& descending, const std::string& mode, int w) {
        EdgeMode em = mode == "band" ? EdgeMode::BandEdge : EdgeMode::WignerEdge;
        return measure_to_dict(edge_point_process(Spectrum(descending), em, w));
      },
      py::arg("eigenvalues_descending"), py::arg("mode") = "wigner", py::arg("w") = 0);

  m.def("ks_two_sample", &ks_two_sample, py::arg("a"), py::arg("b"));
  m.def(
      "sup_cdf_distance",
      [](const std::vector<double>& la, const std::vector<double>& wa,
         const std::vector<double>& lb, const std::vector<double>& wb) {
        return sup_cdf_distance(measure_from(la, wa), measure_from(lb, wb));
      },
      py::arg("locations_a"), py::arg("weights_a"), py::arg("locations_b"),
      py::arg("weights_b"));

  m.def(
      "raw_moment",
      [](const std::vector<double>& locations, const std::vector<double>& weights, int order) {
        return raw_moment(measure_from(locations, weights), order);
      },
      py::arg("locations"), py::arg("weights"), py::arg("order"));

  m.def("catalan", &catalan, py::arg("j"));
  m.def(
      "semicircle_moment",
      [](int m) {
        Rational r = semicircle_moment(m);
        return py::make_tuple(r.num, r.den);
      },
      py::arg("m"));
  m.def(
      "gaussian_moment",
      [](int m) {
        Rational r = gaussian_moment(m);
        return py::make_tuple(r.num, r.den);
      },
      py::arg("m"));
  m.def("semicircle_cdf", &semicircle_cdf, py::arg("x"));
  m.def(
      "semicircle_quadrature",
      [](int n) { return measure_to_dict(semicircle_quadrature(n)); }, py::arg("n"));
  m.def(
      "gauss_hermite_measure",
      [](int k) { return measure_to_dict(gauss_hermite_measure(k)); }, py::arg("k"));

  m.def("trace_power_moments", &trace_power_moments, py::arg("matrix"), py::arg("kappa"),
        py::arg("m_max"));
  m.def(
      "modified_trace_moments",
      [](const HermitianMatrix& h, int kappa, int n_max, const std::string& family) {
        PolynomialFamily fam = family == "chebyshev-u"
                                   ? PolynomialFamily::chebyshev_u()
                                   : PolynomialFamily::non_backtracking(kappa);
        return modified_trace_moments(h, kappa, fam, n_max);
      },
      py::arg("matrix"), py::arg("kappa"), py::arg("n_max"),
      py::arg("family") = "non-backtracking");
  m.def("hermite_sum_moment", &hermite_sum_moment, py::arg("samples"), py::arg("n"));

  m.def(
      "sonin_bound_check",
      [](const std::vector<double>& locations, const std::vector<double>& weights, int m) {
        SoninReport r = sonin_bound_check(measure_from(locations, weights), m);
        py::dict d;
        d["matched_up_to"] = r.matched_up_to;
        d["bound"] = r.bound;
        d["observed"] = r.observed;
        d["holds"] = r.holds;
        return d;
      },
      py::arg("locations"), py::arg("weights"), py::arg("m"));

  m.def(
      "erdos_turan_bracket",
      [](const std::vector<double>& locations, const std::vector<double>& weights, double xi,
         int n0) {
        EtReport r = erdos_turan_bracket(measure_from(locations, weights), xi, n0);
        py::dict d;
        d["rho"] = r.rho;
        d["bracket"] = r.bracket;
        d["discrepancy"] = r.discrepancy;
        return d;
      },
      py::arg("locations"), py::arg("weights"), py::arg("xi"), py::arg("n0"));

  m.def(
      "corner_moment_profile",
      [](const std::vector<double>& locations, const std::vector<double>& weights, double eps,
         double eta, const std::vector<double>& alpha_grid, const std::string& parity) {
        return corner_moment_profile(measure_from(locations, weights), eps, eta, alpha_grid,
                                     parity == "odd" ? MomentParity::Odd : MomentParity::Even);
      },
      py::arg("locations"), py::arg("weights"), py::arg("eps"), py::arg("eta"),
      py::arg("alpha_grid"), py::arg("parity") = "even");

  m.def(
      "krein_transform",
      [](const std::vector<double>& locations, const std::vector<double>& weights, double alpha,
         double window) {
        KreinResult r = krein_transform(measure_from(locations, weights), alpha, window);
        return py::make_tuple(r.value, r.window);
      },
      py::arg("locations"), py::arg("weights"), py::arg("alpha"), py::arg("window"));

  m.def(
      "enumerate_nb_paths",
      [](const std::shared_ptr<GraphSpec>& g, int u, int v, int n) {
        std::vector<std::vector<int>> out;
        for (const Walk& w : enumerate_nb_paths(*g, u, v, n)) out.push_back(w.vertices);
        return out;
      },
      py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("n"));

  m.def(
      "verify_nb_identity",
      [](const HermitianMatrix& h, int kappa, int n) {
        return verify_nb_identity(h, kappa, n).max_abs_error;
      },
      py::arg("matrix"), py::arg("kappa"), py::arg("n"));

  m.def(
      "closed_even_census",
      [](const std::shared_ptr<GraphSpec>& g, const std::vector<int>& lengths, long long cap) {
        return closed_even_census(*g, lengths, cap);
      },
      py::arg("graph"), py::arg("lengths"), py::arg("cap") = 20000000LL);

  m.def(
      "classify_tuple",
      [](const std::vector<std::vector<int>>& walks) {
        std::vector<Walk> ws;
        for (const auto& w : walks) ws.push_back(Walk{w});
        WalkTupleClass cls = classify_tuple(ws);
        py::dict d;
        d["vertices"] = cls.vertices;
        d["edges"] = cls.edges;
        d["doubled_edges"] = cls.doubled_edges;
        d["tree_like"] = cls.tree_like;
        d["canonical"] = py::cast(cls.canonical_walks);
        return d;
      },
      py::arg("walks"));

  m.def("tree_like_count", &tree_like_count, py::arg("m"));

  m.def(
      "enumerate_diagrams",
      [](int k, int s_max) {
        py::list out;
        for (const Diagram& d : enumerate_diagrams(k, s_max)) out.append(diagram_to_dict(d));
        return out;
      },
      py::arg("k"), py::arg("s_max"));

  m.def(
      "polytope_volume",
      [](const std::vector<std::vector<int>>& coeff, const std::vector<double>& alpha) {
        VolumeResult v = polytope_volume(Polytope{coeff, alpha});
        py::dict d;
        d["value"] = v.value;
        d["exact"] = v.exact;
        d["rank_deficient"] = v.rank_deficient;
        d["feasible"] = v.feasible;
        d["dimension"] = v.dimension;
        return d;
      },
      py::arg("coeff"), py::arg("alpha"));

  m.def(
      "exp_linear_integral",
      [](const std::vector<std::vector<int>>& coeff, const std::vector<double>& alpha,
         const std::vector<double>& rates) {
        return exp_linear_integral(Polytope{coeff, alpha}, rates).value;
      },
      py::arg("coeff"), py::arg("alpha"), py::arg("rates"));

  m.def(
      "ad_transform_series",
      [](int k, const std::vector<std::vector<double>>& points, double p,
         const std::vector<double>& alpha, int beta, int s_max) {
        PointConfig pc;
        pc.points = points;
        pc.p = p;
        SeriesResult r = ad_transform_series(k, pc, alpha, beta, s_max);
        py::dict d;
        d["value"] = r.value;
        py::list rows;
        for (const SeriesTermRow& row : r.per_s) {
          py::dict rd;
          rd["s"] = row.s;
          rd["term"] = row.term;
          rd["partial_sum"] = row.partial_sum;
          rd["diagrams"] = row.diagrams;
          rows.append(rd);
        }
        d["per_s"] = rows;
        return d;
      },
      py::arg("k"), py::arg("points"), py::arg("p"), py::arg("alpha"), py::arg("beta") = 1,
      py::arg("s_max") = 2);
}
