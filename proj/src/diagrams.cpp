#include "rmt/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rmt {

namespace {

int fold_positions(const std::vector<DiagramStep>& w, bool& wrap_fold) {
  int interior = 0;
  wrap_fold = false;
  int m = static_cast<int>(w.size());
  for (int j = 0; j < m; ++j) {
    const DiagramStep& a = w[j];
    const DiagramStep& b = w[(j + 1) % m];
    bool fold = (a.edge == b.edge) && (a.orient != b.orient);
    if (!fold) continue;
    if (j + 1 == m)
      wrap_fold = true;
    else
      ++interior;
  }
  return interior;
}

}  // namespace

Diagram::Diagram(int k, std::vector<DiagramEdge> edges, std::vector<std::vector<DiagramStep>> walks,
                 std::vector<int> starts, bool allow_base_creases)
    : k_(k), edges_(std::move(edges)), walks_(std::move(walks)), starts_(std::move(starts)) {
  validate_and_derive(allow_base_creases);
}

void Diagram::validate_and_derive(bool allow_base_creases) {
  if (k_ < 1 || static_cast<int>(walks_.size()) != k_ || static_cast<int>(starts_.size()) != k_)
    throw std::invalid_argument("diagram: walk/start count mismatch");

  // compact vertex ids
  std::map<int, int> remap;
  auto touch = [&](int v) {
    if (!remap.count(v)) remap[v] = 0;
  };
  for (const auto& e : edges_) {
    touch(e.u);
    touch(e.v);
  }
  for (int s : starts_) touch(s);
  int next = 0;
  for (auto& [orig, id] : remap) id = next++;
  for (auto& e : edges_) {
    e.u = remap[e.u];
    e.v = remap[e.v];
  }
  for (auto& s : starts_) s = remap[s];
  v_ = next;

  const int E = static_cast<int>(edges_.size());
  std::vector<int> count(E, 0);
  c_.assign(k_, std::vector<int>(E, 0));

  for (int r = 0; r < k_; ++r) {
    const auto& w = walks_[r];
    if (w.empty()) throw std::invalid_argument("diagram: empty walk");
    int cur = starts_[r];
    for (const DiagramStep& st : w) {
      if (st.edge < 0 || st.edge >= E) throw std::invalid_argument("diagram: edge id out of range");
      const DiagramEdge& e = edges_[st.edge];
      if (e.is_loop()) {
        if (cur != e.u) throw std::invalid_argument("diagram: loop traversed away from its vertex");
      } else if (st.orient == 0) {
        if (cur != e.u) throw std::invalid_argument("diagram: walk not incident to edge");
        cur = e.v;
      } else {
        if (cur != e.v) throw std::invalid_argument("diagram: walk not incident to edge");
        cur = e.u;
      }
      count[st.edge] += 1;
      c_[r][st.edge] += 1;
    }
    if (cur != starts_[r]) throw std::invalid_argument("diagram: walk not closed");
    bool wrap = false;
    int interior = fold_positions(w, wrap);
    if (interior > 0)
      throw std::invalid_argument("diagram: walk retraces an edge away from its base point");
    if (wrap && !allow_base_creases)
      throw std::invalid_argument("diagram: base crease not allowed here");
  }

  for (int e = 0; e < E; ++e)
    if (count[e] != 2)
      throw std::invalid_argument("diagram: every edge must be traversed exactly twice");

  std::vector<int> deg(v_, 0);
  for (const auto& e : edges_) {
    if (e.is_loop())
      deg[e.u] += 2;
    else {
      deg[e.u] += 1;
      deg[e.v] += 1;
    }
  }
  for (int v = 0; v < v_; ++v)
    if (deg[v] > 3) throw std::invalid_argument("diagram: vertex degree exceeds 3");
  for (const auto& e : edges_)
    if (e.is_loop() && deg[e.u] != 3)
      throw std::invalid_argument("diagram: loops must hang on a degree-3 vertex");

  s_ = k_ + E - v_;
  if (s_ < 1) throw std::invalid_argument("diagram: genus parameter must be >= 1");

  // Orientable iff some reorientation of the walks traverses every edge once
  // each way.
  orientable_ = false;
  std::vector<std::pair<int, int>> trav_walk(E, {-1, -1});  // walk index of the 2 traversals
  std::vector<std::pair<int, int>> trav_orient(E, {-1, -1});
  for (int r = 0; r < k_; ++r) {
    for (const DiagramStep& st : walks_[r]) {
      if (trav_walk[st.edge].first < 0) {
        trav_walk[st.edge].first = r;
        trav_orient[st.edge].first = st.orient;
      } else {
        trav_walk[st.edge].second = r;
        trav_orient[st.edge].second = st.orient;
      }
    }
  }
  for (int mask = 0; mask < (1 << k_); ++mask) {
    bool ok = true;
    for (int e = 0; e < E && ok; ++e) {
      int o1 = trav_orient[e].first ^ ((mask >> trav_walk[e].first) & 1);
      int o2 = trav_orient[e].second ^ ((mask >> trav_walk[e].second) & 1);
      ok = (o1 != o2);
    }
    if (ok) {
      orientable_ = true;
      break;
    }
  }
}

std::pair<int, int> Diagram::traversing_walks(int e) const {
  int lo = -1, hi = -1;
  for (int r = 0; r < k_; ++r) {
    for (int t = 0; t < c_[r][e]; ++t) {
      if (lo < 0)
        lo = r;
      else
        hi = r;
    }
  }
  if (hi < 0) hi = lo;
  if (lo > hi) std::swap(lo, hi);
  return {hi, lo};  // (r_plus, r_minus)
}

std::vector<int> Diagram::walk_vertices(int r) const {
  std::vector<int> seq;
  int cur = starts_[r];
  seq.push_back(cur);
  for (const DiagramStep& st : walks_[r]) {
    const DiagramEdge& e = edges_[st.edge];
    if (!e.is_loop()) cur = (st.orient == 0) ? e.v : e.u;
    seq.push_back(cur);
  }
  return seq;
}

namespace {

// Encodes the diagram with walks in the given order after applying the given
// rotations/reversals; vertices and edges are relabeled by first appearance,
// orientations relative to each edge's first traversal.
std::vector<int> encode_transformed(const Diagram& d, const std::vector<int>& perm,
                                    const std::vector<int>& rot, const std::vector<int>& rev) {
  const auto& walks = d.walks();
  std::vector<int> out;
  std::vector<int> vmap(d.vertex_count(), -1);
  std::vector<int> emap(d.edge_count(), -1);
  std::vector<int> efirst(d.edge_count(), -1);
  int vnext = 0, enext = 0;
  for (int idx = 0; idx < d.k(); ++idx) {
    int r = perm[idx];
    const auto& w = walks[r];
    int m = static_cast<int>(w.size());
    std::vector<int> vseq = d.walk_vertices(r);  // length m+1
    // transformed step t: original index
    out.push_back(m);
    for (int t = 0; t < m; ++t) {
      int j;      // original step index
      int vfrom;  // original from-vertex of transformed step
      int orient;
      if (!rev[idx]) {
        j = (t + rot[idx]) % m;
        vfrom = vseq[j];
        orient = w[j].orient;
      } else {
        j = (rot[idx] + m - 1 - t) % m;
        vfrom = vseq[j + 1];
        orient = w[j].orient ^ 1;
      }
      if (vmap[vfrom] < 0) vmap[vfrom] = vnext++;
      int e = w[j].edge;
      if (emap[e] < 0) {
        emap[e] = enext++;
        efirst[e] = orient;
      }
      out.push_back(vmap[vfrom]);
      out.push_back(emap[e]);
      out.push_back(orient == efirst[e] ? 0 : 1);
    }
  }
  return out;
}

std::string to_key(const std::vector<int>& enc) {
  std::string s;
  s.reserve(enc.size() * 3);
  for (int x : enc) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

std::vector<int> min_encoding_for_perm(const Diagram& d, const std::vector<int>& perm) {
  std::vector<int> best;
  int k = d.k();
  std::vector<int> rot(k, 0), rev(k, 0);
  // iterate over all rotation/reversal combinations
  std::vector<int> mlen(k);
  for (int i = 0; i < k; ++i) mlen[i] = static_cast<int>(d.walks()[perm[i]].size());
  std::function<void(int)> loop = [&](int i) {
    if (i == k) {
      std::vector<int> enc = encode_transformed(d, perm, rot, rev);
      if (best.empty() || enc < best) best = std::move(enc);
      return;
    }
    for (rev[i] = 0; rev[i] < 2; ++rev[i])
      for (rot[i] = 0; rot[i] < mlen[i]; ++rot[i]) loop(i + 1);
    rev[i] = 0;
    rot[i] = 0;
  };
  loop(0);
  return best;
}

}  // namespace

std::string Diagram::canonical_key_permuted(const std::vector<int>& perm) const {
  return to_key(min_encoding_for_perm(*this, perm));
}

std::string Diagram::canonical_key() const {
  std::vector<int> perm(k_);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> enc = min_encoding_for_perm(*this, perm);
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return to_key(best);
}

std::string Diagram::serialize() const {
  std::ostringstream os;
  os << "diagram k=" << k_ << " s=" << s_ << " V=" << v_ << " E=" << edges_.size()
     << " orientable=" << (orientable_ ? 1 : 0) << "\n";
  for (int r = 0; r < k_; ++r) {
    os << "walk " << r << ":";
    std::vector<int> vseq = walk_vertices(r);
    for (std::size_t t = 0; t < walks_[r].size(); ++t)
      os << " " << vseq[t] << " e" << walks_[r][t].edge;
    os << " " << vseq.back() << "\n";
  }
  for (int r = 0; r < k_; ++r) {
    os << "c " << r << ":";
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) os << " " << c_[r][e];
    os << "\n";
  }
  return os.str();
}

Diagram diagram_from_walks(const std::vector<int>& starts,
                           const std::vector<std::vector<ExplicitStep>>& walks) {
  int k = static_cast<int>(walks.size());
  int max_edge = -1;
  for (const auto& w : walks)
    for (const auto& st : w) max_edge = std::max(max_edge, st.edge);
  std::vector<DiagramEdge> edges(max_edge + 1);
  std::vector<int> seen(max_edge + 1, 0);
  std::vector<std::vector<DiagramStep>> steps(k);
  for (int r = 0; r < k; ++r) {
    int cur = starts[r];
    for (const auto& st : walks[r]) {
      if (st.edge < 0) throw std::invalid_argument("diagram_from_walks: bad edge id");
      DiagramStep ds;
      ds.edge = st.edge;
      if (!seen[st.edge]) {
        seen[st.edge] = 1;
        edges[st.edge] = {cur, st.to};
        ds.orient = 0;
      } else {
        const DiagramEdge& e = edges[st.edge];
        if (e.is_loop()) {
          if (cur != e.u || st.to != e.u)
            throw std::invalid_argument("diagram_from_walks: loop endpoint mismatch");
          ds.orient = st.loop_reversed ? 1 : 0;
        } else if (cur == e.u && st.to == e.v) {
          ds.orient = 0;
        } else if (cur == e.v && st.to == e.u) {
          ds.orient = 1;
        } else {
          throw std::invalid_argument("diagram_from_walks: edge endpoint mismatch");
        }
      }
      steps[r].push_back(ds);
      cur = st.to;
    }
  }
  for (int e = 0; e <= max_edge; ++e)
    if (!seen[e]) throw std::invalid_argument("diagram_from_walks: unused edge id");
  return Diagram(k, std::move(edges), std::move(steps), starts, /*allow_base_creases=*/true);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of reduced crease-free diagrams.

namespace {

class DiagramEnumerator {
 public:
  DiagramEnumerator(int k, int s_max) : k_(k), s_max_(s_max), e_max_(3 * s_max - k) {}

  std::vector<Diagram> run() {
    start_walk(0);
    std::vector<Diagram> out;
    out.reserve(found_.size());
    for (auto& [key, d] : found_) out.push_back(std::move(d));
    std::stable_sort(out.begin(), out.end(), [](const Diagram& a, const Diagram& b) {
      if (a.genus_parameter() != b.genus_parameter())
        return a.genus_parameter() < b.genus_parameter();
      return a.edge_count() < b.edge_count();
    });
    return out;
  }

 private:
  void start_walk(int r) {
    if (r == k_) {
      finish();
      return;
    }
    // base point at an existing vertex, or in a fresh component
    for (int v = 0; v <= nv_; ++v) {
      bool fresh = (v == nv_);
      if (fresh) new_vertex();
      starts_.push_back(v);
      walks_.emplace_back();
      step(r, v, -1, -1);
      walks_.pop_back();
      starts_.pop_back();
      if (fresh) drop_vertex();
      if (r == 0) break;  // first walk always starts the first component
    }
  }

  void step(int r, int cur, int last_edge, int last_orient) {
    if (steps_total_ + deficit_ > 2 * e_max_) return;

    // close the walk
    if (cur == starts_[r] && !walks_[r].empty()) {
      const DiagramStep& first = walks_[r].front();
      const DiagramStep& last = walks_[r].back();
      bool wrap_fold = (first.edge == last.edge) && (first.orient != last.orient);
      if (!wrap_fold) start_walk(r + 1);
    }

    // traverse an existing edge (indices re-read each iteration: the
    // incident/edge vectors reallocate during recursion)
    const std::size_t inc_size = incident_[cur].size();
    for (std::size_t ii = 0; ii < inc_size; ++ii) {
      int f = incident_[cur][ii];
      if (count_[f] >= 2) continue;
      DiagramEdge e = edges_[f];
      if (e.is_loop()) {
        for (int orient = 0; orient < 2; ++orient) {
          if (f == last_edge && orient != last_orient) continue;  // fold
          take(r, cur, f, orient, cur);
        }
      } else {
        int orient = (cur == e.u) ? 0 : 1;
        if (f == last_edge && orient != last_orient) continue;
        int to = (orient == 0) ? e.v : e.u;
        take(r, cur, f, orient, to);
      }
    }

    if (ne_ >= e_max_) return;
    if (steps_total_ + deficit_ + 2 > 2 * e_max_) return;

    // new edge to an existing vertex (or a loop at cur)
    for (int w = 0; w < nv_; ++w) {
      if (w == cur) {
        if (deg_[cur] > 1) continue;  // loop adds 2
        int f = new_edge(cur, cur);
        take(r, cur, f, 0, cur);
        drop_edge(cur, cur);
      } else {
        if (deg_[cur] >= 3 || deg_[w] >= 3) continue;
        int f = new_edge(cur, w);
        take(r, cur, f, 0, w);
        drop_edge(cur, w);
      }
    }

    // new edge to a new vertex
    if (deg_[cur] < 3) {
      int w = nv_;
      new_vertex();
      int f = new_edge(cur, w);
      take(r, cur, f, 0, w);
      drop_edge(cur, w);
      drop_vertex();
    }
  }

  void take(int r, int cur, int f, int orient, int to) {
    count_[f] += 1;
    deficit_ -= 1;
    steps_total_ += 1;
    walks_[r].push_back({f, orient});
    step(r, to, f, orient);
    walks_[r].pop_back();
    steps_total_ -= 1;
    deficit_ += 1;
    count_[f] -= 1;
  }

  void new_vertex() {
    deg_.push_back(0);
    incident_.emplace_back();
    ++nv_;
  }
  void drop_vertex() {
    deg_.pop_back();
    incident_.pop_back();
    --nv_;
  }
  int new_edge(int u, int v) {
    edges_.push_back({u, v});
    count_.push_back(0);
    deficit_ += 2;
    if (u == v) {
      deg_[u] += 2;
      incident_[u].push_back(ne_);
    } else {
      deg_[u] += 1;
      deg_[v] += 1;
      incident_[u].push_back(ne_);
      incident_[v].push_back(ne_);
    }
    return ne_++;
  }
  void drop_edge(int u, int v) {
    edges_.pop_back();
    count_.pop_back();
    deficit_ -= 2;
    --ne_;
    if (u == v) {
      deg_[u] -= 2;
      incident_[u].pop_back();
    } else {
      deg_[u] -= 1;
      deg_[v] -= 1;
      incident_[u].pop_back();
      incident_[v].pop_back();
    }
  }

  void finish() {
    if (deficit_ != 0) return;
    int s = k_ + ne_ - nv_;
    if (s < 1 || s > s_max_) return;
    // loops hang on degree-3 vertices
    for (const auto& e : edges_)
      if (e.is_loop() && deg_[e.u] != 3) return;
    // reduced: any degree-2 vertex must be half of a parallel-pair component
    for (int v = 0; v < nv_; ++v) {
      if (deg_[v] != 2) continue;
      int e1 = incident_[v][0], e2 = incident_[v][1];
      int a = edges_[e1].u == v ? edges_[e1].v : edges_[e1].u;
      int b = edges_[e2].u == v ? edges_[e2].v : edges_[e2].u;
      if (a != b) return;               // suppressible subdivision point
      if (deg_[a] != 2) return;         // suppressible into a loop on a
    }
    Diagram d(k_, edges_, walks_, starts_, /*allow_base_creases=*/false);
    std::string key = d.canonical_key();
    found_.emplace(std::move(key), std::move(d));
  }

  int k_, s_max_, e_max_;
  int nv_ = 0, ne_ = 0;
  int steps_total_ = 0, deficit_ = 0;
  std::vector<DiagramEdge> edges_;
  std::vector<int> count_;
  std::vector<int> deg_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<DiagramStep>> walks_;
  std::vector<int> starts_;
  std::map<std::string, Diagram> found_;
};

}  // namespace

std::vector<Diagram> enumerate_diagrams(int k, int s_max) {
  if (k < 1 || k > 2) throw std::invalid_argument("enumerate_diagrams: k in {1,2} required");
  if (s_max < 1 || s_max > 4)
    throw std::invalid_argument("enumerate_diagrams: s_max <= 4 (exhaustive regime)");
  DiagramEnumerator gen(k, s_max);
  return gen.run();
}

std::vector<DiagramCountRow> diagram_count_report(int k, int s_max) {
  std::vector<Diagram> catalog = enumerate_diagrams(k, s_max);
  std::vector<DiagramCountRow> rows;
  for (int s = 1; s <= s_max; ++s) {
    DiagramCountRow row;
    row.k = k;
    row.s = s;
    for (const Diagram& d : catalog)
      if (d.genus_parameter() == s) ++row.count;
    if (row.count > 0) {
      double fact = 1.0;
      for (int i = 2; i < k; ++i) fact *= i;
      double root = std::pow(static_cast<double>(row.count) * fact, 1.0 / (s + k - 1));
      row.c_min_upper = root / s;
      row.c_min_lower = s / root;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rmt
