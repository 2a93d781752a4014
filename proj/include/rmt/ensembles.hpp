#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rmt/graph.hpp"
#include "rmt/rng.hpp"

namespace rmt {

enum class EntryKind { RademacherSign, RealGaussian, ComplexUnimodular, ComplexGaussian, Zero };
enum class EntryTarget { Diagonal, OffDiagonal };

// Entry law for one of the two positions (diagonal / off-diagonal). All
// off-diagonal kinds are centered with E|z|^2 = 1; diagonal kinds are real,
// centered, finite variance.
struct EntryDistribution {
  EntryKind kind = EntryKind::Zero;
  EntryTarget target = EntryTarget::OffDiagonal;

  EntryDistribution(EntryKind k, EntryTarget t);

  bool is_complex() const {
    return kind == EntryKind::ComplexUnimodular || kind == EntryKind::ComplexGaussian;
  }
  // |z| = 1 almost surely.
  bool is_unimodular() const {
    return kind == EntryKind::RademacherSign || kind == EntryKind::ComplexUnimodular;
  }

  std::complex<double> sample(RandomStream& rs) const;
  std::string name() const;

  static EntryKind kind_from_name(const std::string& name);
};

// Dense Hermitian matrix supported on a graph: only the upper triangle is
// stored, the lower one is derived by conjugation, and entries vanish off
// the edge set and diagonal.
class HermitianMatrix {
 public:
  HermitianMatrix(std::shared_ptr<const GraphSpec> graph, bool is_real);

  int dim() const { return n_; }
  bool is_real() const { return is_real_; }
  const GraphSpec& graph() const { return *graph_; }
  std::shared_ptr<const GraphSpec> graph_ptr() const { return graph_; }

  std::complex<double> operator()(int u, int v) const {
    if (u <= v) return upper_[pack(u, v)];
    return std::conj(upper_[pack(v, u)]);
  }

  // Sets H(u,v) and H(v,u) = conj together; diagonal values are forced real.
  void set(int u, int v, std::complex<double> z);

  // Dense row-major copies for numerical kernels.
  std::vector<double> dense_real() const;
  std::vector<std::complex<double>> dense_complex() const;

  double max_abs_entry() const;
  double frobenius_norm() const;
  std::complex<double> trace() const;

 private:
  std::size_t pack(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u - 1) / 2 +
           (v - u);
  }

  std::shared_ptr<const GraphSpec> graph_;
  int n_;
  bool is_real_;
  std::vector<std::complex<double>> upper_;
};

// Samples the random matrix attached to the graph: off-diagonal entries are
// i.i.d. copies of `offdiag` on edges (Hermitian-symmetrized), diagonal
// entries i.i.d. copies of `diag`, all other entries zero. Entry streams are
// keyed by (seed, u, v), so the result is independent of evaluation order.
HermitianMatrix sample_matrix(std::shared_ptr<const GraphSpec> graph,
                              const EntryDistribution& diag, const EntryDistribution& offdiag,
                              std::uint64_t seed);

struct TruncationResult {
  HermitianMatrix matrix;
  // Number of (ordered) entries that were zeroed; an upper bound on the rank
  // of the difference.
  long long changed_entries;
};

// Keeps entries with |H(u,v)| <= threshold, zeroes the rest.
TruncationResult truncate_matrix(const HermitianMatrix& h, double threshold);

// Writes (row, col, re, im) rows for all structurally stored entries.
std::string matrix_to_csv(const HermitianMatrix& h);

}  // namespace rmt
