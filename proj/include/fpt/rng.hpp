// rng.hpp - counter-based stream for reproducible parallel Monte Carlo.
//
// Philox4x32-10 (Salmon et al., SC 2011). The key is the global seed and
// half of the 128-bit counter is the path index, so the sample sequence
// for path i depends only on (seed, i) -- never on worker count or
// scheduling.

#ifndef FPT_RNG_HPP
#define FPT_RNG_HPP

#include <array>
#include <cstdint>

namespace fpt {

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t path_index)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        ctr_{0u, 0u, static_cast<std::uint32_t>(path_index),
             static_cast<std::uint32_t>(path_index >> 32)} {}

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_u64() {
    if (pos_ == 0) {
      fill_block();
      pos_ = 2;
    }
    --pos_;
    const int base = 2 * (1 - pos_);
    return (static_cast<std::uint64_t>(out_[base + 1]) << 32) | out_[base];
  }

 private:
  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;

  static void round(std::array<std::uint32_t, 4>& c,
                    const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }

  void fill_block() {
    out_ = ctr_;
    std::array<std::uint32_t, 2> k = key_;
    for (int i = 0; i < 10; ++i) {
      round(out_, k);
      k[0] += kW0;
      k[1] += kW1;
    }
    // Advance the draw counter; the path-index half is never touched.
    if (++ctr_[0] == 0u) ++ctr_[1];
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> out_{};
  int pos_ = 0;
};

}  // namespace fpt

#endif  // FPT_RNG_HPP
