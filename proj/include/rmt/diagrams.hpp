#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rmt {

// A k-diagram: k closed walks on an abstract multigraph (parallel edges and
// loops allowed) in which every edge is traversed exactly twice in total,
// every vertex has degree at most three, and no walk immediately retraces an
// edge except possibly across its base point. Equivalence is taken modulo
// graph relabeling, rotation and reversal of each walk, and permutation of
// the walks; the catalog built by enumerate_diagrams keeps one reduced,
// crease-free representative per class.

struct DiagramEdge {
  int u = 0, v = 0;  // endpoints; u == v is a loop
  bool is_loop() const { return u == v; }
};

struct DiagramStep {
  int edge = 0;
  int orient = 0;  // 0: along stored (u -> v); 1: reversed. Loops: 0 = as first laid down.
};

class Diagram {
 public:
  // walks given as step sequences; start[r] is the base vertex of walk r.
  Diagram(int k, std::vector<DiagramEdge> edges, std::vector<std::vector<DiagramStep>> walks,
          std::vector<int> starts, bool allow_base_creases);

  int k() const { return k_; }
  int vertex_count() const { return v_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  // Genus parameter s = k + E - V (= 2k - Euler characteristic of the glued
  // surface).
  int genus_parameter() const { return s_; }
  // True when some choice of walk orientations traverses every edge once in
  // each direction (orientation-preserving gluing).
  bool orientable() const { return orientable_; }

  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const std::vector<std::vector<DiagramStep>>& walks() const { return walks_; }
  const std::vector<int>& starts() const { return starts_; }

  // c[r][e]: number of times walk r traverses edge e (0, 1 or 2); column
  // sums are exactly 2.
  const std::vector<std::vector<int>>& traversal_counts() const { return c_; }

  // Walk indices r_plus >= r_minus of the two traversals of edge e.
  std::pair<int, int> traversing_walks(int e) const;

  // Canonical key under relabeling, per-walk rotation/reversal and walk
  // permutation; two diagrams are catalog-equal iff keys match.
  std::string canonical_key() const;
  // Canonical key of the diagram with walks reordered by `perm`.
  std::string canonical_key_permuted(const std::vector<int>& perm) const;

  // Vertex sequence of walk r (length m_r + 1, closed).
  std::vector<int> walk_vertices(int r) const;

  std::string serialize() const;

 private:
  void validate_and_derive(bool allow_base_creases);

  int k_ = 0;
  int v_ = 0;
  int s_ = 0;
  bool orientable_ = false;
  std::vector<DiagramEdge> edges_;
  std::vector<std::vector<DiagramStep>> walks_;
  std::vector<int> starts_;
  std::vector<std::vector<int>> c_;
};

// Convenience builder: steps as (edge id, target vertex, loop_reversed flag);
// edge endpoints are inferred from the walk. Base creases are allowed, so
// figure-style representatives with doubled tail edges can be written down
// directly.
struct ExplicitStep {
  int edge;
  int to;
  int loop_reversed = 0;
};
Diagram diagram_from_walks(const std::vector<int>& starts,
                           const std::vector<std::vector<ExplicitStep>>& walks);

// Exhaustive catalog of reduced crease-free k-diagrams with genus parameter
// s <= s_max (k in {1,2}, s_max <= 4), deduplicated by canonical form.
std::vector<Diagram> enumerate_diagrams(int k, int s_max);

struct DiagramCountRow {
  int k = 0;
  int s = 0;
  long long count = 0;
  // Smallest constants for which the two-sided bound
  // (s/C)^{s+k-1}/(k-1)! <= D_k(s) <= (C s)^{s+k-1}/(k-1)! holds; the
  // admissible region is C >= max of the two.
  double c_min_upper = 0.0;
  double c_min_lower = 0.0;
};

std::vector<DiagramCountRow> diagram_count_report(int k, int s_max);

}  // namespace rmt
