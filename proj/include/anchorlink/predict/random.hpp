#pragma once

#include <cstdint>

#include "anchorlink/common.hpp"
#include "anchorlink/rng.hpp"

namespace anchorlink {

/// Uniform score in [0, 1) that depends only on the seed and the pair.
inline double score_random(std::uint64_t seed, NodeId source, NodeId target) {
  const std::uint64_t pair = (static_cast<std::uint64_t>(source) << 32) | target;
  return bits_to_unit(splitmix64(splitmix64(seed) ^ pair));
}

}  // namespace anchorlink
