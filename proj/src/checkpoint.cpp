#include "theta/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <zlib.h>

#include "json.hpp"
#include "theta/errors.hpp"

namespace theta {

namespace {

using json = nlohmann::ordered_json;

std::string crc_hex(std::string_view payload) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(payload.data()), static_cast<uInt>(payload.size()));
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

json parse_line(std::string_view line, const std::string& field) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw IntegrityError(field, std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw IntegrityError(where + "." + key, "missing");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw IntegrityError(where + "." + key, "wrong type");
  }
}

}  // namespace

std::string serialize_checkpoint(const Checkpoint& cp) {
  std::string payload;
  json header;
  header["version"] = cp.version;
  header["kind"] = cp.kind;
  header["limit"] = cp.limit;
  payload += header.dump() + "\n";
  for (const auto& c : cp.chunks) {
    json line;
    line["chunk"] = c.index;
    line["lo"] = c.lo;
    line["hi"] = c.hi;
    auto values = json::array();
    for (const auto& [k, s] : c.values) values.push_back({k, s});
    line["values"] = std::move(values);
    payload += line.dump() + "\n";
  }
  json tail;
  tail["checksum"] = crc_hex(payload);
  return payload + tail.dump() + "\n";
}

Checkpoint parse_checkpoint(std::string_view text) {
  std::vector<std::string_view> lines;
  std::vector<std::size_t> starts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) throw IntegrityError("file", "truncated final line");
    starts.push_back(pos);
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.size() < 2) throw IntegrityError("file", "missing header or checksum line");

  const json tail = parse_line(lines.back(), "checksum");
  const auto stored = require<std::string>(tail, "checksum", "trailer");
  const std::string actual = crc_hex(text.substr(0, starts.back()));
  if (stored != actual) throw IntegrityError("checksum", "expected " + stored + ", computed " + actual);

  const json header = parse_line(lines.front(), "header");
  Checkpoint cp;
  cp.version = require<int>(header, "version", "header");
  if (cp.version != kCheckpointVersion) {
    throw IntegrityError("header.version", "unsupported version " + std::to_string(cp.version));
  }
  cp.kind = require<std::string>(header, "kind", "header");
  cp.limit = require<std::int64_t>(header, "limit", "header");

  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const std::string where = "chunk[" + std::to_string(i - 1) + "]";
    const json line = parse_line(lines[i], where);
    ChunkRecord c;
    c.index = require<std::int64_t>(line, "chunk", where);
    c.lo = require<std::int64_t>(line, "lo", where);
    c.hi = require<std::int64_t>(line, "hi", where);
    if (c.index != static_cast<std::int64_t>(i - 1)) throw IntegrityError(where + ".chunk", "chunks not contiguous");
    if (c.lo > c.hi || c.hi > cp.limit) throw IntegrityError(where + ".hi", "range outside limit");
    if (!cp.chunks.empty() && c.lo != cp.chunks.back().hi + 1) throw IntegrityError(where + ".lo", "gap after previous chunk");
    c.values = require<std::vector<std::pair<std::int64_t, std::int64_t>>>(line, "values", where);
    cp.chunks.push_back(std::move(c));
  }
  return cp;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  const std::string text = serialize_checkpoint(cp);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename to " + path.string() + " failed: " + ec.message());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_checkpoint(buf.str());
}

Checkpoint checkpoint_roundtrip(const Checkpoint& cp, const std::filesystem::path& path) {
  save_checkpoint(path, cp);
  return load_checkpoint(path);
}

}  // namespace theta
