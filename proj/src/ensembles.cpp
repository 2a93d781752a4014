#include "rmt/ensembles.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rmt {

EntryDistribution::EntryDistribution(EntryKind k, EntryTarget t) : kind(k), target(t) {
  if (t == EntryTarget::Diagonal &&
      (k == EntryKind::ComplexUnimodular || k == EntryKind::ComplexGaussian)) {
    throw std::invalid_argument("diagonal entries of a Hermitian matrix must be real");
  }
}

std::complex<double> EntryDistribution::sample(RandomStream& rs) const {
  switch (kind) {
    case EntryKind::RademacherSign:
      return {rs.next_sign(), 0.0};
    case EntryKind::RealGaussian:
      return {rs.next_gaussian(), 0.0};
    case EntryKind::ComplexUnimodular: {
      double theta = 6.283185307179586476925286766559 * rs.next_unit_open();
      return {std::cos(theta), std::sin(theta)};
    }
    case EntryKind::ComplexGaussian: {
      constexpr double inv_sqrt2 = 0.70710678118654752440;
      return {rs.next_gaussian() * inv_sqrt2, rs.next_gaussian() * inv_sqrt2};
    }
    case EntryKind::Zero:
      return {0.0, 0.0};
  }
  return {0.0, 0.0};
}

std::string EntryDistribution::name() const {
  switch (kind) {
    case EntryKind::RademacherSign:
      return "rademacher";
    case EntryKind::RealGaussian:
      return "gauss";
    case EntryKind::ComplexUnimodular:
      return "unimodular";
    case EntryKind::ComplexGaussian:
      return "complex-gauss";
    case EntryKind::Zero:
      return "zero";
  }
  return "?";
}

EntryKind EntryDistribution::kind_from_name(const std::string& name) {
  if (name == "rademacher" || name == "sign") return EntryKind::RademacherSign;
  if (name == "gauss" || name == "gaussian") return EntryKind::RealGaussian;
  if (name == "unimodular") return EntryKind::ComplexUnimodular;
  if (name == "complex-gauss" || name == "complex-gaussian") return EntryKind::ComplexGaussian;
  if (name == "zero") return EntryKind::Zero;
  throw std::invalid_argument("unknown entry distribution: " + name);
}

HermitianMatrix::HermitianMatrix(std::shared_ptr<const GraphSpec> graph, bool is_real)
    : graph_(std::move(graph)), n_(graph_->vertex_count()), is_real_(is_real) {
  upper_.assign(static_cast<std::size_t>(n_) * (n_ + 1) / 2, {0.0, 0.0});
}

void HermitianMatrix::set(int u, int v, std::complex<double> z) {
  if (u == v) {
    upper_[pack(u, u)] = {z.real(), 0.0};
    return;
  }
  if (u > v) {
    std::swap(u, v);
    z = std::conj(z);
  }
  upper_[pack(u, v)] = z;
}

std::vector<double> HermitianMatrix::dense_real() const {
  if (!is_real_) throw std::logic_error("dense_real on a complex matrix");
  std::vector<double> a(static_cast<std::size_t>(n_) * n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u; v < n_; ++v) {
      double x = upper_[pack(u, v)].real();
      a[static_cast<std::size_t>(u) * n_ + v] = x;
      a[static_cast<std::size_t>(v) * n_ + u] = x;
    }
  }
  return a;
}

std::vector<std::complex<double>> HermitianMatrix::dense_complex() const {
  std::vector<std::complex<double>> a(static_cast<std::size_t>(n_) * n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u; v < n_; ++v) {
      std::complex<double> x = upper_[pack(u, v)];
      a[static_cast<std::size_t>(u) * n_ + v] = x;
      a[static_cast<std::size_t>(v) * n_ + u] = std::conj(x);
    }
  }
  return a;
}

double HermitianMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const auto& z : upper_) m = std::max(m, std::abs(z));
  return m;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int u = 0; u < n_; ++u) {
    double d = std::norm(upper_[pack(u, u)]);
    s += d;
    for (int v = u + 1; v < n_; ++v) s += 2.0 * std::norm(upper_[pack(u, v)]);
  }
  return std::sqrt(s);
}

std::complex<double> HermitianMatrix::trace() const {
  std::complex<double> t = 0.0;
  for (int u = 0; u < n_; ++u) t += upper_[pack(u, u)];
  return t;
}

HermitianMatrix sample_matrix(std::shared_ptr<const GraphSpec> graph,
                              const EntryDistribution& diag, const EntryDistribution& offdiag,
                              std::uint64_t seed) {
  if (diag.target != EntryTarget::Diagonal || offdiag.target != EntryTarget::OffDiagonal)
    throw std::invalid_argument("sample_matrix: distribution targets mismatched");
  const GraphSpec& g = *graph;
  int n = g.vertex_count();
  HermitianMatrix h(graph, !offdiag.is_complex());
  for (int u = 0; u < n; ++u) {
    if (diag.kind != EntryKind::Zero) {
      RandomStream rs(seed, entry_key(u, u));
      h.set(u, u, diag.sample(rs));
    }
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      if (offdiag.kind == EntryKind::Zero) continue;
      RandomStream rs(seed, entry_key(u, v));
      h.set(u, v, offdiag.sample(rs));
    }
  }
  return h;
}

TruncationResult truncate_matrix(const HermitianMatrix& h, double threshold) {
  if (threshold < 0) throw std::invalid_argument("truncate_matrix: threshold must be >= 0");
  int n = h.dim();
  HermitianMatrix out(h.graph_ptr(), h.is_real());
  long long changed = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      std::complex<double> z = h(u, v);
      if (z == std::complex<double>(0.0, 0.0)) continue;
      if (std::abs(z) <= threshold) {
        out.set(u, v, z);
      } else {
        changed += (u == v) ? 1 : 2;  // ordered entries: (u,v) and (v,u)
      }
    }
  }
  return {std::move(out), changed};
}

std::string matrix_to_csv(const HermitianMatrix& h) {
  std::ostringstream os;
  os << "row,col,re,im\n";
  os.precision(17);
  int n = h.dim();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      std::complex<double> z = h(u, v);
      if (z == std::complex<double>(0.0, 0.0) && u != v) continue;
      os << u << "," << v << "," << z.real() << "," << z.imag() << "\n";
    }
  return os.str();
}

}  // namespace rmt
