#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace theta {

inline constexpr int kCheckpointVersion = 1;

/// Results of one completed block of k values.
struct ChunkRecord {
  std::int64_t index = 0;
  std::int64_t lo = 0;  // first k covered
  std::int64_t hi = 0;  // last k covered
  std::vector<std::pair<std::int64_t, std::int64_t>> values;  // (k, S(k)) for scanned k

  friend bool operator==(const ChunkRecord&, const ChunkRecord&) = default;
};

/// Scan state on disk as JSON lines: a header {version, kind, limit}, one line
/// per completed chunk, then {"checksum": crc32 of everything before it}.
struct Checkpoint {
  int version = kCheckpointVersion;
  std::string kind;
  std::int64_t limit = 0;
  std::vector<ChunkRecord> chunks;

  /// Last k covered by the completed chunks, 0 when none.
  std::int64_t completed_through() const { return chunks.empty() ? 0 : chunks.back().hi; }

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

std::string serialize_checkpoint(const Checkpoint& cp);

/// Throws IntegrityError naming the offending field on malformed input,
/// version mismatch, non-contiguous chunks, or checksum mismatch.
Checkpoint parse_checkpoint(std::string_view text);

/// Writes to a sibling temp file and renames it over `path`.
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);

Checkpoint load_checkpoint(const std::filesystem::path& path);

/// save then load through `path`.
Checkpoint checkpoint_roundtrip(const Checkpoint& cp, const std::filesystem::path& path);

}  // namespace theta
