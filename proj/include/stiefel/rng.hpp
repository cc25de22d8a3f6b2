#pragma once

#include <cstdint>

namespace stiefel {

/// Counter-based random stream (Philox4x32-10). A stream is identified by
/// (seed, cell, trial); distinct identifiers give statistically independent
/// streams, which makes parallel sweeps reproducible: every trial of every
/// sweep cell owns its stream regardless of scheduling.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed, uint32_t cell = 0, uint32_t trial = 0);

  uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double next_double();
  /// Standard normal (Box-Muller; second value cached).
  double next_gaussian();

 private:
  void refill();

  uint32_t key_[2];
  uint32_t ctr_[4];  // [block_lo, block_hi, cell, trial]
  uint32_t out_[4];
  int pos_ = 4;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

}  // namespace stiefel
