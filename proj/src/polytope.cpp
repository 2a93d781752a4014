#include "rmt/polytope.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "rmt/rng.hpp"

namespace rmt {

Polytope diagram_polytope(const Diagram& d, const std::vector<double>& alpha) {
  if (static_cast<int>(alpha.size()) != d.k())
    throw std::invalid_argument("diagram_polytope: alpha length must equal k");
  for (double a : alpha)
    if (!(a > 0.0)) throw std::invalid_argument("diagram_polytope: alpha must be positive");
  Polytope p;
  p.coeff.assign(d.k(), std::vector<int>(d.edge_count(), 0));
  for (int r = 0; r < d.k(); ++r)
    for (int e = 0; e < d.edge_count(); ++e) p.coeff[r][e] = d.traversal_counts()[r][e];
  p.alpha = alpha;
  return p;
}

namespace {

using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;

mpq_class rat_of(double x) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

// Gaussian elimination rank of a rational matrix (destructive).
int rat_rank(Mat m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Solves the square system A x = b; returns false when singular.
bool rat_solve(Mat a, Vec b, Vec& x) {
  int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

mpq_class rat_det(Mat a) {
  int n = static_cast<int>(a.size());
  mpq_class det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[c], a[pivot]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
    }
  }
  return det;
}

// Chart description: inequalities A y <= b over the free coordinates, one
// row per original variable (identity rows for the free ones).
struct Chart {
  int dim = 0;
  std::vector<int> basis;  // eliminated variable indices (size k)
  std::vector<int> free;   // remaining variable indices (size dim)
  Mat ineq_a;              // one row per original variable
  Vec ineq_b;
  bool rank_deficient = false;
  // w of basis variable i as affine function: t[i] - sum_f m[i][f] y_f
  Mat m;
  Vec t;
};

Chart build_chart(const Polytope& p) {
  Chart ch;
  const int k = p.constraints();
  const int e = p.variables();
  if (k == 0 || e == 0) throw std::invalid_argument("polytope: empty system");
  for (const auto& row : p.coeff)
    if (static_cast<int>(row.size()) != e)
      throw std::invalid_argument("polytope: ragged coefficient rows");

  // lexicographically first independent column set (greedy gives it)
  Mat cols_so_far;
  for (int c = 0; c < e && static_cast<int>(ch.basis.size()) < k; ++c) {
    Mat trial = cols_so_far;
    Vec col(k);
    for (int r = 0; r < k; ++r) col[r] = p.coeff[r][c];
    trial.push_back(col);
    if (rat_rank(trial) == static_cast<int>(trial.size())) {
      cols_so_far = std::move(trial);
      ch.basis.push_back(c);
    }
  }
  if (static_cast<int>(ch.basis.size()) < k) {
    ch.rank_deficient = true;
    return ch;
  }
  std::vector<char> in_basis(e, 0);
  for (int c : ch.basis) in_basis[c] = 1;
  for (int c = 0; c < e; ++c)
    if (!in_basis[c]) ch.free.push_back(c);
  ch.dim = e - k;

  // invert the basis block: solve C_J x = rhs for each needed rhs
  Mat cj(k, Vec(k));
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < k; ++j) cj[r][j] = p.coeff[r][ch.basis[j]];
  // t = C_J^{-1} alpha
  Vec alpha(k);
  for (int r = 0; r < k; ++r) alpha[r] = rat_of(p.alpha[r]);
  if (!rat_solve(cj, alpha, ch.t)) throw std::logic_error("polytope: basis not invertible");
  // m columns: C_J^{-1} c_f
  ch.m.assign(k, Vec(ch.dim, 0));
  for (int fi = 0; fi < ch.dim; ++fi) {
    Vec rhs(k);
    for (int r = 0; r < k; ++r) rhs[r] = p.coeff[r][ch.free[fi]];
    Vec sol;
    if (!rat_solve(cj, rhs, sol)) throw std::logic_error("polytope: basis not invertible");
    for (int r = 0; r < k; ++r) ch.m[r][fi] = sol[r];
  }

  // inequalities: for free f: -y_f <= 0 ; for basis i: sum_f m[i][f] y_f <= t[i]
  ch.ineq_a.assign(e, Vec(ch.dim, 0));
  ch.ineq_b.assign(e, 0);
  for (int fi = 0; fi < ch.dim; ++fi) {
    ch.ineq_a[ch.free[fi]][fi] = -1;
    ch.ineq_b[ch.free[fi]] = 0;
  }
  for (int bi = 0; bi < k; ++bi) {
    for (int fi = 0; fi < ch.dim; ++fi) ch.ineq_a[ch.basis[bi]][fi] = ch.m[bi][fi];
    ch.ineq_b[ch.basis[bi]] = ch.t[bi];
  }
  return ch;
}

struct VertexSet {
  std::vector<Vec> pts;
};

VertexSet enumerate_vertices(const Chart& ch) {
  VertexSet vs;
  const int d = ch.dim;
  const int m = static_cast<int>(ch.ineq_a.size());
  if (d == 0) {
    // single point chart: feasibility is b >= 0
    for (int i = 0; i < m; ++i)
      if (ch.ineq_b[i] < 0) return vs;
    vs.pts.push_back({});
    return vs;
  }
  std::vector<int> pick(d);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == d) {
      Mat a(d, Vec(d));
      Vec b(d);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a[i][j] = ch.ineq_a[pick[i]][j];
        b[i] = ch.ineq_b[pick[i]];
      }
      Vec x;
      if (!rat_solve(std::move(a), std::move(b), x)) return;
      for (int i = 0; i < m; ++i) {
        mpq_class lhs = 0;
        for (int j = 0; j < d; ++j) lhs += ch.ineq_a[i][j] * x[j];
        if (lhs > ch.ineq_b[i]) return;  // infeasible
      }
      for (const Vec& p : vs.pts)
        if (p == x) return;
      vs.pts.push_back(std::move(x));
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return vs;
}

int affine_dim(const std::vector<Vec>& pts, int d) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  Mat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec row(d);
    for (int j = 0; j < d; ++j) row[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(row));
  }
  return rat_rank(std::move(diffs));
}

// Recursive boundary triangulation. Returns simplices as index tuples into
// `all`; `face` lists vertex indices of the current face, `dim` its affine
// dimension.
void triangulate_face(const Chart& ch, const std::vector<Vec>& all, std::vector<int> face, int dim,
                      std::vector<std::vector<int>>& out, std::vector<int>& partial) {
  if (dim == 0) {
    std::vector<int> simplex = partial;
    simplex.push_back(face[0]);
    out.push_back(std::move(simplex));
    return;
  }
  // apex: lexicographically smallest vertex of the face
  int apex = face[0];
  for (int idx : face)
    if (all[idx] < all[apex]) apex = idx;
  partial.push_back(apex);
  // facets of this face: tight sets of single inequalities, of dimension dim-1,
  // not containing the apex
  const int m = static_cast<int>(ch.ineq_a.size());
  std::vector<std::vector<int>> seen_facets;
  for (int i = 0; i < m; ++i) {
    std::vector<int> sub;
    bool apex_tight = false;
    for (int idx : face) {
      mpq_class lhs = 0;
      for (int j = 0; j < ch.dim; ++j) lhs += ch.ineq_a[i][j] * all[idx][j];
      if (lhs == ch.ineq_b[i]) {
        sub.push_back(idx);
        if (idx == apex) apex_tight = true;
      }
    }
    if (apex_tight || sub.empty() || sub.size() == face.size()) continue;
    std::vector<Vec> pts;
    for (int idx : sub) pts.push_back(all[idx]);
    if (affine_dim(pts, ch.dim) != dim - 1) continue;
    bool dup = false;
    for (const auto& f : seen_facets)
      if (f == sub) dup = true;
    if (dup) continue;
    seen_facets.push_back(sub);
    triangulate_face(ch, all, sub, dim - 1, out, partial);
  }
  partial.pop_back();
}

mpq_class simplex_volume(const std::vector<Vec>& all, const std::vector<int>& simplex, int d) {
  Mat diff(d, Vec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) diff[i][j] = all[simplex[i + 1]][j] - all[simplex[0]][j];
  mpq_class det = rat_det(std::move(diff));
  if (det < 0) det = -det;
  mpq_class fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return det / fact;
}

// integral of exp(-<lambda, b>) over the corner simplex {l_i >= 0, sum <= 1}
// in R^d with nodes b_0..b_d; series in the centered nodes, bisecting the
// widest edge when the spread is too large for stable summation.
double corner_exp_integral(std::vector<double> b, int d, int depth = 0);

double corner_series(const std::vector<double>& b, int d) {
  int n = static_cast<int>(b.size());
  long double mean = 0.0;
  for (double x : b) mean += x;
  mean /= n;
  std::vector<long double> delta(n);
  for (int i = 0; i < n; ++i) delta[i] = b[i] - mean;
  // complete homogeneous symmetric polynomials of the deltas
  constexpr int kMaxTerms = 120;
  std::vector<long double> h(kMaxTerms + 1, 0.0L);
  h[0] = 1.0L;
  for (int i = 0; i < n; ++i)
    for (int m = 1; m <= kMaxTerms; ++m) h[m] += delta[i] * h[m - 1];
  long double invfact = 1.0L;
  for (int i = 1; i <= d; ++i) invfact /= i;
  long double sum = 0.0L, term_scale = invfact;  // 1/(m+d)! for m=0
  int sign = 1;
  for (int m = 0; m <= kMaxTerms; ++m) {
    long double term = sign * h[m] * term_scale;
    sum += term;
    if (m > 4 && std::fabs(static_cast<double>(term)) <
                     1e-19 * std::max(1e-300, std::fabs(static_cast<double>(sum))))
      break;
    sign = -sign;
    term_scale /= (m + d + 1);
  }
  return static_cast<double>(std::exp(-static_cast<long double>(mean)) * sum);
}

double corner_exp_integral(std::vector<double> b, int d, int depth) {
  double lo = b[0], hi = b[0];
  for (double x : b) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (lo > 745.0) return 0.0;  // complete underflow of exp(-b)
  constexpr double kSpreadLimit = 4.0;
  if (hi - lo <= kSpreadLimit || depth > 48) return corner_series(b, d);
  // bisect the pair realizing the spread
  int i_lo = 0, i_hi = 0;
  for (int i = 0; i < static_cast<int>(b.size()); ++i) {
    if (b[i] == lo) i_lo = i;
    if (b[i] == hi) i_hi = i;
  }
  double mid = 0.5 * (b[i_lo] + b[i_hi]);
  std::vector<double> b1 = b, b2 = b;
  b1[i_lo] = mid;
  b2[i_hi] = mid;
  return 0.5 * (corner_exp_integral(std::move(b1), d, depth + 1) +
                corner_exp_integral(std::move(b2), d, depth + 1));
}

struct Decomposition {
  Chart chart;
  std::vector<Vec> vertices;
  std::vector<std::vector<int>> simplices;
  bool feasible = true;
  bool full_dim = true;
};

Decomposition decompose(const Polytope& p) {
  Decomposition dec;
  dec.chart = build_chart(p);
  if (dec.chart.rank_deficient) return dec;
  VertexSet vs = enumerate_vertices(dec.chart);
  dec.vertices = std::move(vs.pts);
  if (dec.vertices.empty()) {
    dec.feasible = false;
    return dec;
  }
  if (dec.chart.dim == 0) {
    dec.simplices.push_back({0});
    return dec;
  }
  if (affine_dim(dec.vertices, dec.chart.dim) < dec.chart.dim) {
    dec.full_dim = false;  // measure zero in the chart
    return dec;
  }
  std::vector<int> face(dec.vertices.size());
  for (std::size_t i = 0; i < face.size(); ++i) face[i] = static_cast<int>(i);
  std::vector<int> partial;
  triangulate_face(dec.chart, dec.vertices, face, dec.chart.dim, dec.simplices, partial);
  return dec;
}

}  // namespace

VolumeResult polytope_volume(const Polytope& p) {
  VolumeResult res;
  res.dimension = p.variables() - p.constraints();
  Decomposition dec = decompose(p);
  if (dec.chart.rank_deficient) {
    res.rank_deficient = true;
    res.exact = "0";
    return res;
  }
  if (!dec.feasible) {
    res.feasible = false;
    res.exact = "0";
    return res;
  }
  if (dec.chart.dim == 0 || !dec.full_dim) {
    res.exact = "0";
    return res;  // no d-dimensional mass
  }
  mpq_class vol = 0;
  for (const auto& s : dec.simplices) vol += simplex_volume(dec.vertices, s, dec.chart.dim);
  res.value = mpq_get_d(vol.get_mpq_t());
  res.exact = vol.get_str();
  return res;
}

VolumeResult exp_linear_integral(const Polytope& p, const std::vector<double>& rates) {
  if (static_cast<int>(rates.size()) != p.variables())
    throw std::invalid_argument("exp_linear_integral: rates length mismatch");
  for (double r : rates)
    if (r < 0.0 || !std::isfinite(r))
      throw std::invalid_argument("exp_linear_integral: rates must be >= 0");
  bool all_zero = true;
  for (double r : rates)
    if (r != 0.0) all_zero = false;
  if (all_zero) return polytope_volume(p);

  VolumeResult res;
  res.dimension = p.variables() - p.constraints();
  Decomposition dec = decompose(p);
  if (dec.chart.rank_deficient) {
    res.rank_deficient = true;
    return res;
  }
  if (!dec.feasible) {
    res.feasible = false;
    return res;
  }
  if (dec.chart.dim == 0 || !dec.full_dim) return res;

  const Chart& ch = dec.chart;
  const int d = ch.dim;
  const int k = p.constraints();
  // linear form l(y) = sum_f rate_f y_f + sum_i rate_basis_i (t_i - m_i . y)
  auto l_at = [&](const Vec& y) {
    double v = 0.0;
    for (int fi = 0; fi < d; ++fi)
      v += rates[ch.free[fi]] * mpq_get_d(y[fi].get_mpq_t());
    for (int bi = 0; bi < k; ++bi) {
      mpq_class w = ch.t[bi];
      for (int fi = 0; fi < d; ++fi) w -= ch.m[bi][fi] * y[fi];
      v += rates[ch.basis[bi]] * mpq_get_d(w.get_mpq_t());
    }
    return v;
  };

  double total = 0.0;
  mpq_class dfact = 1;
  for (int i = 2; i <= d; ++i) dfact *= i;
  for (const auto& s : dec.simplices) {
    mpq_class vol = simplex_volume(dec.vertices, s, d);
    if (vol == 0) continue;
    std::vector<double> b(d + 1);
    for (int i = 0; i <= d; ++i) b[i] = l_at(dec.vertices[s[i]]);
    double factor = mpq_get_d(mpq_class(vol * dfact).get_mpq_t());
    total += factor * corner_exp_integral(std::move(b), d);
  }
  res.value = total;
  return res;
}

McVolume polytope_volume_mc(const Polytope& p, long long samples, std::uint64_t seed) {
  McVolume mc;
  mc.samples = samples;
  Chart ch = build_chart(p);
  if (ch.rank_deficient) return mc;
  const int d = ch.dim;
  if (d == 0) return mc;
  // bounding box from the original constraints: w_f <= alpha_r / c_rf
  std::vector<double> box(d, 0.0);
  for (int fi = 0; fi < d; ++fi) {
    int col = ch.free[fi];
    double bound = -1.0;
    for (int r = 0; r < p.constraints(); ++r) {
      if (p.coeff[r][col] > 0) {
        double b = p.alpha[r] / p.coeff[r][col];
        bound = bound < 0 ? b : std::min(bound, b);
      }
    }
    if (bound < 0) throw std::invalid_argument("polytope_volume_mc: unbounded variable");
    box[fi] = bound;
  }
  // double-precision copies of the affine system
  std::vector<std::vector<double>> m(p.constraints(), std::vector<double>(d));
  std::vector<double> t(p.constraints());
  for (int bi = 0; bi < p.constraints(); ++bi) {
    t[bi] = mpq_get_d(ch.t[bi].get_mpq_t());
    for (int fi = 0; fi < d; ++fi) m[bi][fi] = mpq_get_d(ch.m[bi][fi].get_mpq_t());
  }
  double box_vol = 1.0;
  for (double b : box) box_vol *= b;
  RandomStream rs(seed, 0xb0c5);
  long long hits = 0;
  std::vector<double> y(d);
  for (long long it = 0; it < samples; ++it) {
    for (int fi = 0; fi < d; ++fi) y[fi] = box[fi] * rs.next_unit_open();
    bool ok = true;
    for (int bi = 0; bi < p.constraints() && ok; ++bi) {
      double w = t[bi];
      for (int fi = 0; fi < d; ++fi) w -= m[bi][fi] * y[fi];
      ok = (w >= 0.0);
    }
    if (ok) ++hits;
  }
  double ph = static_cast<double>(hits) / samples;
  mc.value = box_vol * ph;
  mc.std_error = box_vol * std::sqrt(std::max(ph * (1.0 - ph), 1e-12) / samples);
  return mc;
}

}  // namespace rmt
