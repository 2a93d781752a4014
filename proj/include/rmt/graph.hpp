#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rmt {

enum class GraphKind { Complete, Band, Explicit };

// Regular graph skeleton carrying an ensemble: complete graph on N vertices,
// periodic band graph (edge iff 1 <= ||u-v||_N <= W), or an explicit
// adjacency list validated to be regular.
class GraphSpec {
 public:
  static GraphSpec complete(int n);
  // Periodic band graph; requires 2W < N so that antipodal pairs are not
  // double-counted by the wrap-around distance.
  static GraphSpec band(int n, int w);
  static GraphSpec explicit_graph(const std::vector<std::vector<int>>& adjacency);

  GraphKind kind() const { return kind_; }
  int vertex_count() const { return n_; }
  int band_width() const { return w_; }
  // Regular degree kappa.
  int connectivity() const { return kappa_; }

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }
  long long edge_count() const { return static_cast<long long>(n_) * kappa_ / 2; }

  // Periodic distance min_l |u - v - l*N|.
  static int periodic_distance(int u, int v, int n);

  std::string describe() const;

 private:
  GraphSpec() = default;
  void build_dense();

  GraphKind kind_ = GraphKind::Complete;
  int n_ = 0;
  int w_ = 0;
  int kappa_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> dense_;  // n*n adjacency lookup
};

}  // namespace rmt
