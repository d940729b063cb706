// Copyright 2026 The OntoWeave Authors
// SPDX-License-Identifier: Apache-2.0

#include "ontoweave/zip.hpp"

#include <cstdint>
#include <cstring>

#include <zlib.h>

namespace ontoweave::zip {

namespace {

constexpr std::uint32_t kLocalHeader = 0x04034b50;
constexpr std::uint32_t kCentralHeader = 0x02014b50;
constexpr std::uint32_t kEndOfCentral = 0x06054b50;
// 1980-01-01 00:00 in MS-DOS format.
constexpr std::uint16_t kDosTime = 0;
constexpr std::uint16_t kDosDate = (0 << 9) | (1 << 5) | 1;
constexpr std::uint16_t kFlagUtf8 = 1 << 11;
constexpr std::uint16_t kFlagEncrypted = 1;

void put16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>(v >> 8));
}

void put32(std::string& out, std::uint32_t v) {
  put16(out, static_cast<std::uint16_t>(v & 0xFFFF));
  put16(out, static_cast<std::uint16_t>(v >> 16));
}

std::uint16_t get16(std::string_view in, std::size_t at) {
  return static_cast<std::uint16_t>(
      static_cast<unsigned char>(in[at]) |
      (static_cast<unsigned char>(in[at + 1]) << 8));
}

std::uint32_t get32(std::string_view in, std::size_t at) {
  return get16(in, at) | (static_cast<std::uint32_t>(get16(in, at + 2)) << 16);
}

std::optional<std::string> deflate_raw(std::string_view data) {
  z_stream zs{};
  if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, -MAX_WBITS, 8,
                   Z_DEFAULT_STRATEGY) != Z_OK) {
    return std::nullopt;
  }
  std::string out(deflateBound(&zs, static_cast<uLong>(data.size())), '\0');
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  const std::size_t produced = zs.total_out;
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) return std::nullopt;
  out.resize(produced);
  return out;
}

std::optional<std::string> inflate_raw(std::string_view data,
                                       std::size_t expected) {
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) return std::nullopt;
  std::string out(expected, '\0');
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const std::size_t produced = zs.total_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != expected) return std::nullopt;
  return out;
}

Outcome<std::vector<Entry>> corrupt(const std::string& why) {
  return Outcome<std::vector<Entry>>::failure(make_error(
      "E060", "not a readable ZIP package: " + why, SourceSpan::point(1, 1)));
}

}  // namespace

std::uint32_t crc32(std::string_view data) {
  return static_cast<std::uint32_t>(
      ::crc32(0L, reinterpret_cast<const Bytef*>(data.data()),
              static_cast<uInt>(data.size())));
}

std::string write(const std::vector<Entry>& entries, Method method) {
  std::string out;
  std::string central;
  for (const auto& e : entries) {
    std::string payload = e.data;
    std::uint16_t code = 0;
    if (method == Method::Deflate) {
      if (auto packed = deflate_raw(e.data)) {
        payload = std::move(*packed);
        code = 8;
      }
    }
    const std::uint32_t crc = crc32(e.data);
    const auto offset = static_cast<std::uint32_t>(out.size());

    put32(out, kLocalHeader);
    put16(out, 20);
    put16(out, kFlagUtf8);
    put16(out, code);
    put16(out, kDosTime);
    put16(out, kDosDate);
    put32(out, crc);
    put32(out, static_cast<std::uint32_t>(payload.size()));
    put32(out, static_cast<std::uint32_t>(e.data.size()));
    put16(out, static_cast<std::uint16_t>(e.name.size()));
    put16(out, 0);
    out += e.name;
    out += payload;

    put32(central, kCentralHeader);
    put16(central, 20);
    put16(central, 20);
    put16(central, kFlagUtf8);
    put16(central, code);
    put16(central, kDosTime);
    put16(central, kDosDate);
    put32(central, crc);
    put32(central, static_cast<std::uint32_t>(payload.size()));
    put32(central, static_cast<std::uint32_t>(e.data.size()));
    put16(central, static_cast<std::uint16_t>(e.name.size()));
    put16(central, 0);  // extra
    put16(central, 0);  // comment
    put16(central, 0);  // disk
    put16(central, 0);  // internal attributes
    put32(central, 0);  // external attributes
    put32(central, offset);
    central += e.name;
  }
  const auto central_offset = static_cast<std::uint32_t>(out.size());
  out += central;
  put32(out, kEndOfCentral);
  put16(out, 0);
  put16(out, 0);
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put32(out, static_cast<std::uint32_t>(central.size()));
  put32(out, central_offset);
  put16(out, 0);
  return out;
}

Outcome<std::vector<Entry>> read(std::string_view in) {
  constexpr std::size_t kEndSize = 22;
  if (in.size() < kEndSize) return corrupt("too short");
  // The end record sits in the last 22 + 65535 bytes (trailing comment).
  std::size_t end = std::string_view::npos;
  const std::size_t lowest =
      in.size() > kEndSize + 0xFFFF ? in.size() - kEndSize - 0xFFFF : 0;
  for (std::size_t at = in.size() - kEndSize + 1; at-- > lowest;) {
    if (get32(in, at) == kEndOfCentral) {
      end = at;
      break;
    }
  }
  if (end == std::string_view::npos) return corrupt("no end record");
  const std::uint16_t count = get16(in, end + 10);
  const std::uint32_t central_size = get32(in, end + 12);
  const std::uint32_t central_offset = get32(in, end + 16);
  if (count == 0xFFFF || central_offset == 0xFFFFFFFF) {
    return corrupt("ZIP64 archives are not supported");
  }
  if (static_cast<std::uint64_t>(central_offset) + central_size > end) {
    return corrupt("central directory out of bounds");
  }

  std::vector<Entry> entries;
  std::size_t at = central_offset;
  for (std::uint16_t i = 0; i < count; ++i) {
    if (at + 46 > end || get32(in, at) != kCentralHeader) {
      return corrupt("bad central directory entry");
    }
    const std::uint16_t flags = get16(in, at + 8);
    const std::uint16_t method = get16(in, at + 10);
    const std::uint32_t crc = get32(in, at + 16);
    const std::uint32_t packed_size = get32(in, at + 20);
    const std::uint32_t size = get32(in, at + 24);
    const std::uint16_t name_len = get16(in, at + 28);
    const std::uint16_t extra_len = get16(in, at + 30);
    const std::uint16_t comment_len = get16(in, at + 32);
    const std::uint32_t local = get32(in, at + 42);
    if (at + 46 + name_len > end) return corrupt("truncated entry name");
    Entry entry{std::string(in.substr(at + 46, name_len)), {}};
    at += 46 + name_len + extra_len + comment_len;

    if (flags & kFlagEncrypted) return corrupt("encrypted entry");
    if (static_cast<std::uint64_t>(local) + 30 > in.size() ||
        get32(in, local) != kLocalHeader) {
      return corrupt("bad local header for " + entry.name);
    }
    const std::size_t data_at =
        local + 30 + get16(in, local + 26) + get16(in, local + 28);
    if (data_at + packed_size > in.size()) {
      return corrupt("truncated data for " + entry.name);
    }
    const std::string_view packed = in.substr(data_at, packed_size);
    if (method == 0) {
      entry.data = std::string(packed);
    } else if (method == 8) {
      auto data = inflate_raw(packed, size);
      if (!data) return corrupt("cannot inflate " + entry.name);
      entry.data = std::move(*data);
    } else {
      return corrupt("unsupported compression method " +
                     std::to_string(method));
    }
    if (entry.data.size() != size || crc32(entry.data) != crc) {
      return corrupt("checksum mismatch for " + entry.name);
    }
    entries.push_back(std::move(entry));
  }
  return Outcome<std::vector<Entry>>::success(std::move(entries));
}

const Entry* find(const std::vector<Entry>& entries, std::string_view name) {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace ontoweave::zip
