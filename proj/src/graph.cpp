#include "rmt/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmt {

int GraphSpec::periodic_distance(int u, int v, int n) {
  int d = (u - v) % n;
  if (d < 0) d += n;
  return std::min(d, n - d);
}

GraphSpec GraphSpec::complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  GraphSpec g;
  g.kind_ = GraphKind::Complete;
  g.n_ = n;
  g.kappa_ = n - 1;
  g.adj_.resize(n);
  for (int u = 0; u < n; ++u) {
    g.adj_[u].reserve(n - 1);
    for (int v = 0; v < n; ++v)
      if (v != u) g.adj_[u].push_back(v);
  }
  g.build_dense();
  return g;
}

GraphSpec GraphSpec::band(int n, int w) {
  if (n < 1 || w < 1) throw std::invalid_argument("band graph needs n >= 1, w >= 1");
  if (2 * w >= n)
    throw std::invalid_argument("band graph needs 2W < N (wrap-around edges must stay distinct)");
  GraphSpec g;
  g.kind_ = GraphKind::Band;
  g.n_ = n;
  g.w_ = w;
  g.kappa_ = 2 * w;
  g.adj_.resize(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      int d = periodic_distance(u, v, n);
      if (d >= 1 && d <= w) g.adj_[u].push_back(v);
    }
  }
  g.build_dense();
  return g;
}

GraphSpec GraphSpec::explicit_graph(const std::vector<std::vector<int>>& adjacency) {
  int n = static_cast<int>(adjacency.size());
  if (n < 1) throw std::invalid_argument("explicit graph needs at least one vertex");
  GraphSpec g;
  g.kind_ = GraphKind::Explicit;
  g.n_ = n;
  g.adj_.resize(n);
  std::vector<std::vector<std::uint8_t>> seen(n, std::vector<std::uint8_t>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v : adjacency[u]) {
      if (v < 0 || v >= n) throw std::invalid_argument("explicit graph: vertex out of range");
      if (v == u) throw std::invalid_argument("explicit graph: self-loops not allowed");
      if (seen[u][v]) throw std::invalid_argument("explicit graph: duplicate edge in list");
      seen[u][v] = 1;
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (seen[u][v] != seen[v][u])
        throw std::invalid_argument("explicit graph: adjacency not symmetric");
  int kappa = static_cast<int>(adjacency[0].size());
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(adjacency[u].size()) != kappa)
      throw std::invalid_argument("explicit graph: not regular");
    g.adj_[u] = adjacency[u];
    std::sort(g.adj_[u].begin(), g.adj_[u].end());
  }
  g.kappa_ = kappa;
  g.build_dense();
  return g;
}

void GraphSpec::build_dense() {
  dense_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u]) dense_[static_cast<std::size_t>(u) * n_ + v] = 1;
}

bool GraphSpec::has_edge(int u, int v) const {
  return dense_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

std::string GraphSpec::describe() const {
  switch (kind_) {
    case GraphKind::Complete:
      return "complete(n=" + std::to_string(n_) + ")";
    case GraphKind::Band:
      return "band(n=" + std::to_string(n_) + ",w=" + std::to_string(w_) + ")";
    default:
      return "explicit(n=" + std::to_string(n_) + ",kappa=" + std::to_string(kappa_) + ")";
  }
}

}  // namespace rmt
