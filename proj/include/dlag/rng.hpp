#ifndef DLAG_RNG_HPP
#define DLAG_RNG_HPP

#include <cmath>
#include <cstdint>

namespace dlag {

/// Hand-rolled splitmix64 stream: bit-for-bit reproducible across
/// platforms and standard libraries, which std:: distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(u64() % span);
  }

  bool coin() { return (u64() & 1ull) != 0; }

  /// Exponential with the given scale (mean); inverse-CDF of uniform01.
  double exponential(double scale) { return -scale * std::log1p(-uniform01()); }

 private:
  std::uint64_t state_;
};

/// Stream for one trial: the per-trial split keeps parallel and serial
/// campaign runs identical.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  Rng mixer(seed + 0x9E3779B97F4A7C15ull * (trial + 1));
  return Rng(mixer.u64());
}

}  // namespace dlag

#endif  // DLAG_RNG_HPP
