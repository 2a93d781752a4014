#include "rmt/paths.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rmt/polynomials.hpp"
#include "rmt/reference.hpp"

namespace rmt {

bool Walk::non_backtracking() const {
  for (std::size_t j = 0; j + 2 < vertices.size(); ++j)
    if (vertices[j] == vertices[j + 2]) return false;
  return true;
}

std::string Walk::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) os << ' ';
    os << vertices[i];
  }
  return os.str();
}

namespace {

void check_guard(const GraphSpec& g, int n) {
  double bound = std::pow(static_cast<double>(std::max(g.connectivity(), 1)), n);
  if (bound > 1e7) throw std::invalid_argument("non-backtracking enumeration guard exceeded (kappa^n > 1e7)");
}

void extend_nb(const GraphSpec& g, std::vector<int>& path, int target, int n,
               std::vector<Walk>& out) {
  if (static_cast<int>(path.size()) == n + 1) {
    if (path.back() == target) out.push_back(Walk{path});
    return;
  }
  int last = path.back();
  int forbidden = path.size() >= 2 ? path[path.size() - 2] : -1;
  for (int w : g.neighbors(last)) {
    if (w == forbidden) continue;
    path.push_back(w);
    extend_nb(g, path, target, n, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Walk> enumerate_nb_paths(const GraphSpec& g, int u, int v, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_nb_paths: n >= 0 required");
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("enumerate_nb_paths: vertex out of range");
  check_guard(g, n);
  std::vector<Walk> out;
  if (n == 0) {
    if (u == v) out.push_back(Walk{{u}});
    return out;
  }
  std::vector<int> path{u};
  extend_nb(g, path, v, n, out);
  return out;
}

namespace {

using cd = std::complex<double>;

// Sum over non-backtracking walks of the edge-weight products, accumulated
// per endpoint without materializing the walks.
void nb_path_sums(const GraphSpec& g, const HermitianMatrix& h, int start, int n, double norm,
                  std::vector<cd>& sums) {
  std::function<void(int, int, cd, int)> rec = [&](int prev, int last, cd prod, int depth) {
    if (depth == n) {
      sums[last] += prod;
      return;
    }
    for (int w : g.neighbors(last)) {
      if (w == prev) continue;
      rec(last, w, prod * h(last, w) * norm, depth + 1);
    }
  };
  rec(-1, start, cd(1.0, 0.0), 0);
}

}  // namespace

NbIdentityReport verify_nb_identity(const HermitianMatrix& h, int kappa, int n) {
  if (n < 0) throw std::invalid_argument("verify_nb_identity: n >= 0 required");
  const GraphSpec& g = h.graph();
  const int N = h.dim();
  check_guard(g, n);
  // Unimodularity: |H(u,v)| = 1 exactly on edges, 0 elsewhere.
  for (int u = 0; u < N; ++u)
    for (int v = u; v < N; ++v) {
      double mod = std::abs(h(u, v));
      bool edge = (u != v) && g.has_edge(u, v);
      if (edge ? std::fabs(mod - 1.0) > 1e-12 : mod != 0.0)
        throw std::invalid_argument("verify_nb_identity: matrix is not unimodular on the graph");
    }

  // Matrix side: P_n(H / 2 sqrt(kappa-1)) by the three-term recurrence.
  PolynomialFamily fam = PolynomialFamily::non_backtracking(kappa);
  double scale = 1.0 / (2.0 * std::sqrt(static_cast<double>(kappa) - 1.0));
  std::vector<cd> a(static_cast<std::size_t>(N) * N);
  {
    auto dense = h.dense_complex();
    for (std::size_t t = 0; t < a.size(); ++t) a[t] = dense[t] * scale;
  }
  std::vector<cd> p_prev(static_cast<std::size_t>(N) * N, cd(0, 0));
  for (int i = 0; i < N; ++i) p_prev[static_cast<std::size_t>(i) * N + i] = 1.0;
  std::vector<cd> p_cur;
  if (n == 0) {
    p_cur = p_prev;
  } else {
    p_cur.assign(static_cast<std::size_t>(N) * N, cd(0, 0));
    for (std::size_t t = 0; t < a.size(); ++t) p_cur[t] = 2.0 * a[t];
    std::vector<cd> prod(static_cast<std::size_t>(N) * N);
    for (int m = 1; m < n; ++m) {
      // prod = A * p_cur
      for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) prod[static_cast<std::size_t>(i) * N + j] = cd(0, 0);
        for (int k = 0; k < N; ++k) {
          cd aik = a[static_cast<std::size_t>(i) * N + k];
          if (aik == cd(0, 0)) continue;
          for (int j = 0; j < N; ++j)
            prod[static_cast<std::size_t>(i) * N + j] +=
                aik * p_cur[static_cast<std::size_t>(k) * N + j];
        }
      }
      double beta = fam.lag_coefficient(m);
      for (std::size_t t = 0; t < prod.size(); ++t) prod[t] = 2.0 * prod[t] - beta * p_prev[t];
      p_prev.swap(p_cur);
      p_cur.swap(prod);
    }
  }

  // Path side.
  double norm = 1.0 / std::sqrt(static_cast<double>(kappa) - 1.0);
  NbIdentityReport rep;
  std::vector<cd> sums(N);
  for (int u = 0; u < N; ++u) {
    std::fill(sums.begin(), sums.end(), cd(0, 0));
    nb_path_sums(g, h, u, n, norm, sums);
    for (int v = 0; v < N; ++v) {
      double err = std::abs(p_cur[static_cast<std::size_t>(u) * N + v] - sums[v]);
      rep.max_abs_error = std::max(rep.max_abs_error, err);
    }
  }
  return rep;
}

namespace {

// Parity signature: edges (as packed pairs) with odd multiplicity in a walk.
std::vector<std::int64_t> parity_signature(const Walk& w, int n) {
  std::map<std::int64_t, int> mult;
  for (std::size_t j = 0; j + 1 < w.vertices.size(); ++j) {
    int a = w.vertices[j], b = w.vertices[j + 1];
    if (a > b) std::swap(a, b);
    mult[static_cast<std::int64_t>(a) * n + b] += 1;
  }
  std::vector<std::int64_t> odd;
  for (auto& [e, c] : mult)
    if (c % 2) odd.push_back(e);
  return odd;
}

std::vector<std::int64_t> xor_signature(const std::vector<std::int64_t>& a,
                                        const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

long long closed_even_census(const GraphSpec& g, const std::vector<int>& lengths, long long cap) {
  if (lengths.empty()) throw std::invalid_argument("closed_even_census: k >= 1 required");
  const int N = g.vertex_count();
  std::vector<std::vector<std::vector<std::int64_t>>> candidates;  // per walk: signatures
  long long total = 0;
  for (int m : lengths) {
    check_guard(g, m);
    std::vector<std::vector<std::int64_t>> sigs;
    for (int b = 0; b < N; ++b) {
      for (const Walk& w : enumerate_nb_paths(g, b, b, m)) sigs.push_back(parity_signature(w, N));
      if (static_cast<long long>(sigs.size()) > cap)
        throw std::invalid_argument("closed_even_census: candidate guard exceeded");
    }
    total += static_cast<long long>(sigs.size());
    candidates.push_back(std::move(sigs));
  }
  double product = 1.0;
  for (auto& c : candidates) product *= static_cast<double>(std::max<std::size_t>(c.size(), 1));
  if (product > static_cast<double>(cap))
    throw std::invalid_argument("closed_even_census: tuple guard exceeded");

  long long count = 0;
  std::function<void(std::size_t, const std::vector<std::int64_t>&)> rec =
      [&](std::size_t r, const std::vector<std::int64_t>& parity) {
        if (r == candidates.size()) {
          if (parity.empty()) ++count;
          return;
        }
        for (const auto& sig : candidates[r]) rec(r + 1, xor_signature(parity, sig));
      };
  rec(0, {});
  return count;
}

std::string census_csv_row(const std::vector<int>& lengths, long long count) {
  std::ostringstream os;
  os << lengths.size();
  for (int m : lengths) os << ',' << m;
  os << ',' << count;
  return os.str();
}

WalkTupleClass classify_tuple(const std::vector<Walk>& walks) {
  if (walks.empty()) throw std::invalid_argument("classify_tuple: empty tuple");
  WalkTupleClass cls;
  cls.tuple_size = static_cast<int>(walks.size());
  std::map<int, int> relabel;
  std::map<std::pair<int, int>, int> mult;
  for (const Walk& w : walks) {
    if (!w.closed()) throw std::invalid_argument("classify_tuple: walks must be closed");
    std::vector<int> canon;
    canon.reserve(w.vertices.size());
    for (int v : w.vertices) {
      auto it = relabel.find(v);
      if (it == relabel.end()) it = relabel.emplace(v, static_cast<int>(relabel.size())).first;
      canon.push_back(it->second);
    }
    for (std::size_t j = 0; j + 1 < canon.size(); ++j) {
      int a = canon[j], b = canon[j + 1];
      if (a > b) std::swap(a, b);
      mult[{a, b}] += 1;
    }
    cls.canonical_walks.push_back(std::move(canon));
  }
  cls.vertices = static_cast<int>(relabel.size());
  cls.edges = static_cast<int>(mult.size());
  for (auto& [e, c] : mult)
    if (c == 2) ++cls.doubled_edges;
  cls.tree_like =
      (cls.vertices - cls.edges == cls.tuple_size) && (cls.doubled_edges == cls.edges);
  return cls;
}

std::string WalkTupleClass::key() const {
  std::ostringstream os;
  for (const auto& w : canonical_walks) {
    for (std::size_t i = 0; i < w.size(); ++i) os << w[i] << ' ';
    os << '|';
  }
  return os.str();
}

std::int64_t tree_like_count(int m) {
  if (m < 0) throw std::invalid_argument("tree_like_count: m >= 0 required");
  if (m % 2) return 0;
  return catalan(m / 2);
}

std::int64_t tree_like_count_by_enumeration(int m) {
  if (m < 0) throw std::invalid_argument("m >= 0 required");
  if (m == 0) return 1;
  if (m % 2) return 0;
  if (m > 8) throw std::invalid_argument("exhaustive tree-like census limited to m <= 8");
  int n = m + 1;  // enough vertices for every class
  std::set<std::string> classes;
  std::vector<int> path{0};
  std::function<void()> rec = [&]() {
    if (static_cast<int>(path.size()) == m + 1) {
      if (path.back() != 0) return;
      WalkTupleClass cls = classify_tuple({Walk{path}});
      if (cls.tree_like) classes.insert(cls.key());
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (w == path.back()) continue;
      path.push_back(w);
      rec();
      path.pop_back();
    }
  };
  rec();
  return static_cast<std::int64_t>(classes.size());
}

}  // namespace rmt
