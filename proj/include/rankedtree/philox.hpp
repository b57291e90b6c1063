#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace rankedtree {

// Philox4x64-10 counter-based generator. Each (key, counter) pair maps to an
// independent block of four 64-bit words, so per-worker streams are created
// by keying, not by splitting one sequential stream; replaying a (seed,
// stream) pair reproduces the block sequence exactly, independent of thread
// count. The counter is advanced before each block is produced, matching the
// reference implementation this engine was validated against.
class PhiloxEngine {
 public:
  using result_type = std::uint64_t;

  explicit PhiloxEngine(std::uint64_t key0, std::uint64_t key1 = 0)
      : key_{key0, key1} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    if (index_ == kBlockWords) {
      increment_counter();
      block_ = encrypt(counter_, key_);
      index_ = 0;
    }
    return block_[index_++];
  }

 private:
  static constexpr int kBlockWords = 4;
  static constexpr int kRounds = 10;
  static constexpr std::uint64_t kMultiplier0 = 0xD2E7470EE14C6C93ULL;
  static constexpr std::uint64_t kMultiplier1 = 0xCA5A826395121157ULL;
  static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

  using Block = std::array<std::uint64_t, kBlockWords>;
  using Key = std::array<std::uint64_t, 2>;

  static void multiply_full(std::uint64_t a, std::uint64_t b,
                            std::uint64_t& hi, std::uint64_t& lo) {
    const unsigned __int128 product =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(product >> 64);
    lo = static_cast<std::uint64_t>(product);
  }

  static Block encrypt(Block counter, Key key) {
    for (int round = 0; round < kRounds; ++round) {
      std::uint64_t hi0;
      std::uint64_t lo0;
      std::uint64_t hi1;
      std::uint64_t lo1;
      multiply_full(kMultiplier0, counter[0], hi0, lo0);
      multiply_full(kMultiplier1, counter[2], hi1, lo1);
      counter = Block{hi1 ^ counter[1] ^ key[0], lo1,
                      hi0 ^ counter[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return counter;
  }

  void increment_counter() {
    for (int word = 0; word < kBlockWords; ++word) {
      if (++counter_[word] != 0) {
        break;
      }
    }
  }

  Key key_;
  Block counter_{0, 0, 0, 0};
  Block block_{0, 0, 0, 0};
  int index_ = kBlockWords;
};

// Uniform draw from {0, ..., bound-1} by rejection, unbiased for any bound.
inline std::uint64_t uniform_below(PhiloxEngine& engine, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t value = engine();
  while (value < threshold) {
    value = engine();
  }
  return value % bound;
}

}  // namespace rankedtree
