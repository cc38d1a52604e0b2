#include "anchorlink/text/embedding_cache.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <string>

namespace anchorlink {
namespace {

constexpr std::array<char, 4> kMagic{'A', 'L', 'E', 'C'};

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<unsigned char, sizeof(T)> bytes{};
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  const U bits = std::bit_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
T get_le(std::istream& in, std::uint64_t& offset) {
  std::array<unsigned char, sizeof(T)> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T))) {
    throw ParseError("embedding cache truncated", offset);
  }
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) bits |= static_cast<U>(bytes[i]) << (8 * i);
  offset += sizeof(T);
  return std::bit_cast<T>(bits);
}

std::filesystem::path ids_path(const std::filesystem::path& file) {
  return std::filesystem::path(file.string() + ".ids");
}

}  // namespace

void write_embedding_cache(const std::filesystem::path& file, const EmbeddingTable& table) {
  if (table.values.size() != table.ids.size() * table.dimension) {
    throw ArgumentError("embedding table size does not match ids x dimension");
  }
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + file.string());
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kEmbeddingCacheVersion);
  put_le<std::uint32_t>(out, table.dimension);
  put_le<std::uint64_t>(out, table.ids.size());
  for (const float value : table.values) put_le<float>(out, value);

  std::ofstream ids(ids_path(file), std::ios::binary | std::ios::trunc);
  if (!ids) throw Error("cannot write " + ids_path(file).string());
  for (const NodeId id : table.ids) ids << id << '\n';
}

EmbeddingTable read_embedding_cache(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open " + file.string());
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw ParseError("not an embedding cache", 0);
  }
  std::uint64_t offset = magic.size();
  const auto version = get_le<std::uint32_t>(in, offset);
  if (version != kEmbeddingCacheVersion) {
    throw ParseError("unsupported embedding cache version " + std::to_string(version), 4);
  }
  EmbeddingTable table;
  table.dimension = get_le<std::uint32_t>(in, offset);
  const auto count = get_le<std::uint64_t>(in, offset);
  table.values.resize(count * table.dimension);
  for (float& value : table.values) value = get_le<float>(in, offset);

  std::ifstream ids(ids_path(file));
  if (!ids) throw Error("cannot open " + ids_path(file).string());
  NodeId id = 0;
  while (ids >> id) table.ids.push_back(id);
  if (table.ids.size() != count) {
    throw ParseError("id sidecar has " + std::to_string(table.ids.size()) + " rows, header says " +
                         std::to_string(count),
                     offset);
  }
  return table;
}

}  // namespace anchorlink
