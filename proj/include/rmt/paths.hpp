#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/graph.hpp"

namespace rmt {

// Vertex sequence u_0, ..., u_n over a graph. Non-backtracking means
// u_j != u_{j+2} for 0 <= j <= n-2 (the closing step is not constrained
// against the opening one).
struct Walk {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool closed() const { return vertices.front() == vertices.back(); }
  bool non_backtracking() const;
  std::string str() const;
};

// All non-backtracking walks of length n from u to v, by depth-first
// extension forbidding the immediate predecessor. Guard: kappa^n <= 1e7.
std::vector<Walk> enumerate_nb_paths(const GraphSpec& g, int u, int v, int n);

struct NbIdentityReport {
  double max_abs_error = 0.0;
};

// For every (u, v) compares the entry of P_n^{(kappa)}(H / 2 sqrt(kappa-1))
// (three-term matrix recurrence) with the sum over non-backtracking walks of
// prod H(u_j, u_{j+1}) / sqrt(kappa-1)^n. Requires |H(u,v)| = 1 exactly on
// edges and 0 elsewhere.
NbIdentityReport verify_nb_identity(const HermitianMatrix& h, int kappa, int n);

// Exact count of ordered k-tuples of closed non-backtracking walks with
// prescribed lengths in which every spanned edge is traversed an even number
// of times in total. Tuples have independent base points. `cap` bounds the
// number of per-walk candidates enumerated before the product scan.
long long closed_even_census(const GraphSpec& g, const std::vector<int>& lengths,
                             long long cap = 20000000);

// CSV row "k,m_1,...,m_k,count" for a census result.
std::string census_csv_row(const std::vector<int>& lengths, long long count);

// Spanned-multigraph summary of a closed-walk tuple: vertices, edges, edges
// traversed exactly twice, and the canonical relabeling by first appearance.
struct WalkTupleClass {
  std::vector<std::vector<int>> canonical_walks;
  int vertices = 0;       // v
  int edges = 0;          // e (distinct, self-loops allowed)
  int doubled_edges = 0;  // e_2: edges of total multiplicity exactly 2
  int tuple_size = 0;     // k
  bool tree_like = false; // v - e == k and e_2 == e

  std::string key() const;
};

WalkTupleClass classify_tuple(const std::vector<Walk>& walks);

// Number of isomorphism classes of closed tree-like walks of length m:
// Catalan(m/2) for even m, 0 for odd.
std::int64_t tree_like_count(int m);

// Exhaustive cross-check: classifies every closed (ordinary) walk of length
// m on the complete graph and counts the distinct tree-like classes.
std::int64_t tree_like_count_by_enumeration(int m);

}  // namespace rmt
