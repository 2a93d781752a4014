#pragma once

#include <vector>

#include "rmt/ensembles.hpp"

namespace rmt {

// Eigenvalues sorted in decreasing order xi_1 >= ... >= xi_N.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> descending);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int j) const { return values_[j]; }
  const std::vector<double>& values() const { return values_; }
  double largest() const { return values_.front(); }
  double smallest() const { return values_.back(); }

 private:
  std::vector<double> values_;
};

struct EigenOptions {
  // Relative off-diagonal convergence threshold for the QL sweep; values
  // below machine epsilon are clamped to it.
  double tolerance = 0.0;
  int max_sweeps = 50;
};

// Dense symmetric/Hermitian eigenvalues via Householder tridiagonalization
// followed by implicit-shift QL. Complex Hermitian input is embedded into a
// real symmetric matrix of doubled dimension; the doubled spectrum is
// collapsed by pairing sorted values.
Spectrum eigenvalues(const HermitianMatrix& h, const EigenOptions& opts = {});

// In-place kernel on a dense row-major symmetric matrix. Exposed for reuse
// (Jacobi matrices of orthogonal polynomials, rank probes, tests).
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          const EigenOptions& opts = {});

struct EigenSystem {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j = eigenvector of values[j], row-major n*n
};

// Eigenpairs for test-mode checks and quadrature construction (Golub-Welsch).
EigenSystem symmetric_eigensystem(std::vector<double> a, int n, const EigenOptions& opts = {});

// Number of eigenvalues of the difference h - g with modulus above
// eps * max(spectral scale, 1); used with the interlacing bound.
int numerical_rank_of_difference(const HermitianMatrix& h, const HermitianMatrix& g,
                                 double eps = 1e-9);

}  // namespace rmt
