#pragma once

// Binary embedding cache:
//   magic "ALEC" | u32 version | u32 dimension | u64 count    (little-endian)
//   count * dimension float32, row-major, little-endian
// plus a sidecar "<file>.ids" with one id per line, in row order.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "anchorlink/common.hpp"

namespace anchorlink {

inline constexpr std::uint32_t kEmbeddingCacheVersion = 1;

struct EmbeddingTable {
  std::uint32_t dimension = 0;
  std::vector<NodeId> ids;
  std::vector<float> values;  // ids.size() * dimension

  bool operator==(const EmbeddingTable&) const = default;
};

void write_embedding_cache(const std::filesystem::path& file, const EmbeddingTable& table);

/// Throws ParseError on a bad magic, unsupported version, truncated payload
/// or an id sidecar whose length disagrees with the header.
EmbeddingTable read_embedding_cache(const std::filesystem::path& file);

}  // namespace anchorlink
