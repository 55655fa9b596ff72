#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace sqc {

/// Counter-based pseudo-random generator.
///
/// Output position k of a stream with key K is mix(K, k), so any draw can be
/// recomputed independently of the others. Parallel work derives independent
/// substreams by hashing the parent key with a stream index; substream(i) is
/// decoupled from the parent's own output sequence, so it is safe to use both.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(fmix(seed ^ 0x8f1bbcdcbfa53e0bULL)) {}

  std::uint64_t next_u64() { return hash(key_, counter_++); }

  /// Uniform in the open interval (0,1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal (Box-Muller, pairs cached).
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  std::complex<double> next_complex_gaussian() {
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {re, im};
  }

  /// Independent stream derived from this generator's key and `index`.
  /// Does not advance or depend on the parent's counter.
  CounterRng substream(std::uint64_t index) const {
    CounterRng r(0);
    r.key_ = fmix(hash(key_, 0x9e6c63d0876a9a47ULL) ^ fmix(index + 0xd1b54a32d192ed03ULL));
    r.counter_ = 0;
    r.have_spare_ = false;
    return r;
  }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559;

  static std::uint64_t fmix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t hash(std::uint64_t key, std::uint64_t ctr) {
    return fmix(key + 0x9e3779b97f4a7c15ULL * (ctr + 1));
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sqc
