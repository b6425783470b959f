#pragma once

// Counter-based RNG: Philox-4x32-10 keyed by the master seed, with one
// independent stream per Monte Carlo sample (stream id = sample index in the
// high counter words). Reproducibility contract: the draw sequence of a
// sample depends only on (seed, sample index), never on scheduling, so any
// thread partition yields bit-identical results.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace sletwist {

namespace detail {

inline constexpr std::uint32_t kPhiloxMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxWeyl1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                  std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxWeyl0;
      key[1] += kPhiloxWeyl1;
    }
    const std::uint64_t p0 = std::uint64_t(kPhiloxMul0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(kPhiloxMul1) * ctr[2];
    ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
           std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
  }
  return ctr;
}

}  // namespace detail

// One block -> two 64-bit words -> two uniforms. normal() runs Box-Muller on
// a uniform pair and caches the spare, so each normal pair costs one block.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream)
      : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)}, stream_(stream) {}

  // uniform on (0, 1]
  double u01() {
    if (pos_ >= 2) refill();
    return buf_[pos_++];
  }

  // standard normal
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(u01()));
    const double th = 2.0 * std::numbers::pi * u01();
    spare_ = r * std::sin(th);
    has_spare_ = true;
    return r * std::cos(th);
  }

 private:
  void refill() {
    const auto words = detail::philox4x32_10(
        {std::uint32_t(block_), std::uint32_t(block_ >> 32), std::uint32_t(stream_),
         std::uint32_t(stream_ >> 32)},
        key_);
    ++block_;
    const std::uint64_t a = (std::uint64_t(words[0]) << 32) | words[1];
    const std::uint64_t b = (std::uint64_t(words[2]) << 32) | words[3];
    // map to (0,1]: 1 - k*2^-53 with k in [0, 2^53)
    buf_[0] = 1.0 - double(a >> 11) * 0x1.0p-53;
    buf_[1] = 1.0 - double(b >> 11) * 0x1.0p-53;
    pos_ = 0;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_ = 0;
  std::uint64_t block_ = 0;
  std::array<double, 2> buf_{};
  int pos_ = 2;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sletwist
