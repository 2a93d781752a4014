#pragma once

#include <cmath>
#include <cstdint>

namespace rmt {

// Counter-based random streams built on the splitmix64 finalizer.
// Every consumer derives its stream as a pure function of (seed, key),
// so sampled objects do not depend on evaluation order or thread layout.

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream identified by a seed and an arbitrary key (entry index, replicate
// index, ...). Successive draws walk a splitmix64 sequence.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t key)
      : state_(mix64(seed + kGolden) ^ mix64(key * 0xd1342543de82ef95ULL + kGolden)) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform on (0, 1]: never returns 0, safe under log().
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double next_unit_open() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = next_unit();
    double v = next_unit_open();
    double r = std::sqrt(-2.0 * std::log(u));
    double c = std::cos(6.283185307179586476925286766559 * v);
    double s = std::sin(6.283185307179586476925286766559 * v);
    spare_ = r * s;
    have_spare_ = true;
    return r * c;
  }

  // +1 or -1 with equal probability.
  double next_sign() { return (next_u64() >> 63) ? 1.0 : -1.0; }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Key for the matrix entry (u, v); used so that H(u,v) depends only on the
// unordered pair and the seed.
inline std::uint64_t entry_key(std::uint64_t u, std::uint64_t v) {
  return (u << 32) ^ v;
}

// Seed for Monte Carlo replicate r derived from a master seed.
inline std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t replicate) {
  return mix64(master ^ (0xa0761d6478bd642fULL + replicate * kGolden));
}

}  // namespace rmt
