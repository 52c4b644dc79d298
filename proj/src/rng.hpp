/*************************************************************************************
 * Deterministic counter-derived random streams for pixel simulation
 *
 * Copyright 2026 The zenotomo authors
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not use
 * this file except in compliance with the License.  You may obtain a copy of the
 * License at
 *     https://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software distributed
 * under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
 * CONDITIONS OF ANY KIND, either express or implied.  See the License for the
 * specific language governing permissions and limitations under the License.
 *************************************************************************************/

#ifndef ZENOTOMO_RNG_HPP
#define ZENOTOMO_RNG_HPP

#include <cstdint>

namespace zenotomo {

// splitmix64 finalizer; full-avalanche on 64 bits.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stateful splitmix64 stream.  Bit-exact across platforms, which is what the
/// reproducibility contract of the simulator rests on.
class PixelRng {
 public:
  explicit PixelRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for one pixel, derived from (master_seed, pixel_index)
/// so results do not depend on evaluation order or thread partitioning.
inline PixelRng pixel_stream(std::uint64_t master_seed, std::uint64_t pixel_index) {
  const std::uint64_t seed = mix64(mix64(master_seed) ^ (pixel_index + 0x632be59bd9b4e019ULL));
  return PixelRng(seed);
}

}  // namespace zenotomo

#endif  // ZENOTOMO_RNG_HPP
