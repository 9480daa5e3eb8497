// Copyright 2026 The odr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "odr/package/zip.hpp"

#include <zlib.h>

#include <fmt/format.h>

#include "odr/error.hpp"

namespace odr {

namespace {

constexpr std::uint32_t kLocalSig = 0x04034b50;
constexpr std::uint32_t kCentralSig = 0x02014b50;
constexpr std::uint32_t kEndSig = 0x06054b50;
constexpr std::size_t kEndSize = 22;
constexpr std::uint16_t kFlagEncrypted = 0x0001;
constexpr std::uint16_t kFlagUtf8 = 0x0800;
constexpr std::uint16_t kStored = 0;
constexpr std::uint16_t kDeflated = 8;
// 1980-01-01 00:00, so archives are byte-reproducible.
constexpr std::uint16_t kDosTime = 0;
constexpr std::uint16_t kDosDate = (0 << 9) | (1 << 5) | 1;

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidArchive, what); }

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void seek(std::size_t pos) {
    if (pos > bytes_.size()) invalid("offset past end of archive");
    pos_ = pos;
  }
  std::size_t pos() const noexcept { return pos_; }

  std::uint16_t u16() {
    need(2);
    const std::uint16_t v = bytes_[pos_] | (bytes_[pos_ + 1] << 8);
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    const std::uint32_t v = static_cast<std::uint32_t>(bytes_[pos_]) |
                            (static_cast<std::uint32_t>(bytes_[pos_ + 1]) << 8) |
                            (static_cast<std::uint32_t>(bytes_[pos_ + 2]) << 16) |
                            (static_cast<std::uint32_t>(bytes_[pos_ + 3]) << 24);
    pos_ += 4;
    return v;
  }
  std::span<const std::uint8_t> take(std::size_t n) {
    need(n);
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) invalid("archive is truncated");
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

class Writer {
 public:
  void u16(std::uint16_t v) {
    out_.push_back(v & 0xff);
    out_.push_back(v >> 8);
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back((v >> (8 * i)) & 0xff);
  }
  void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
  void text(const std::string& s) { out_.insert(out_.end(), s.begin(), s.end()); }
  std::size_t size() const noexcept { return out_.size(); }
  std::vector<std::uint8_t> release() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

std::uint32_t crc_of(std::span<const std::uint8_t> data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks.
  std::size_t pos = 0;
  while (pos < data.size()) {
    const auto n = static_cast<uInt>(std::min<std::size_t>(data.size() - pos, 1u << 30));
    crc = crc32(crc, data.data() + pos, n);
    pos += n;
  }
  return static_cast<std::uint32_t>(crc);
}

std::vector<std::uint8_t> inflate_raw(std::span<const std::uint8_t> in, std::size_t expected) {
  std::vector<std::uint8_t> out(expected);
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) invalid("inflate initialization failed");
  zs.next_in = const_cast<Bytef*>(in.data());
  zs.avail_in = static_cast<uInt>(in.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const auto produced = zs.total_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != expected) invalid("corrupt deflate stream");
  return out;
}

std::vector<std::uint8_t> deflate_raw(std::span<const std::uint8_t> in) {
  z_stream zs{};
  if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, -MAX_WBITS, 8, Z_DEFAULT_STRATEGY) !=
      Z_OK) {
    throw Error(Errc::IoError, "deflate initialization failed");
  }
  std::vector<std::uint8_t> out(deflateBound(&zs, static_cast<uLong>(in.size())));
  zs.next_in = const_cast<Bytef*>(in.data());
  zs.avail_in = static_cast<uInt>(in.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  out.resize(zs.total_out);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error(Errc::IoError, "deflate failed");
  return out;
}

}  // namespace

std::vector<ZipEntry> zip_read(std::span<const std::uint8_t> archive) {
  if (archive.size() < kEndSize) invalid("too small to be a zip archive");

  // The end record sits within the last 64 KiB + 22 bytes (trailing comment).
  std::size_t end_pos = archive.size() - kEndSize;
  const std::size_t floor = archive.size() > kEndSize + 0xffff ? archive.size() - kEndSize - 0xffff : 0;
  Reader r(archive);
  for (;;) {
    r.seek(end_pos);
    if (r.u32() == kEndSig) break;
    if (end_pos == floor) invalid("no end-of-central-directory record");
    --end_pos;
  }
  r.u16();  // this disk
  r.u16();  // central directory disk
  r.u16();  // entries on this disk
  const std::uint16_t count = r.u16();
  r.u32();  // central directory size
  const std::uint32_t cd_offset = r.u32();
  if (cd_offset == 0xffffffffu || count == 0xffff) invalid("zip64 archives are not supported");

  std::vector<ZipEntry> entries;
  std::size_t cd_pos = cd_offset;
  for (std::uint16_t i = 0; i < count; ++i) {
    r.seek(cd_pos);
    if (r.u32() != kCentralSig) invalid("bad central directory signature");
    r.u16();  // version made by
    r.u16();  // version needed
    const std::uint16_t flags = r.u16();
    const std::uint16_t method = r.u16();
    r.u16();
    r.u16();
    const std::uint32_t crc = r.u32();
    const std::uint32_t csize = r.u32();
    const std::uint32_t usize = r.u32();
    const std::uint16_t name_len = r.u16();
    const std::uint16_t extra_len = r.u16();
    const std::uint16_t comment_len = r.u16();
    r.u16();
    r.u16();
    r.u32();
    const std::uint32_t local_offset = r.u32();
    const auto name_bytes = r.take(name_len);
    std::string name(name_bytes.begin(), name_bytes.end());
    r.take(extra_len);
    r.take(comment_len);
    cd_pos = r.pos();

    if (flags & kFlagEncrypted) invalid(fmt::format("'{}' is encrypted", name));
    if (csize == 0xffffffffu || usize == 0xffffffffu || local_offset == 0xffffffffu) {
      invalid("zip64 archives are not supported");
    }
    if (!name.empty() && name.back() == '/') continue;

    r.seek(local_offset);
    if (r.u32() != kLocalSig) invalid(fmt::format("bad local header for '{}'", name));
    r.seek(local_offset + 26);
    const std::uint16_t local_name_len = r.u16();
    const std::uint16_t local_extra_len = r.u16();
    r.take(local_name_len);
    r.take(local_extra_len);
    const auto compressed = r.take(csize);

    std::vector<std::uint8_t> data;
    if (method == kStored) {
      if (csize != usize) invalid(fmt::format("stored entry '{}' has mismatched sizes", name));
      data.assign(compressed.begin(), compressed.end());
    } else if (method == kDeflated) {
      data = inflate_raw(compressed, usize);
    } else {
      invalid(fmt::format("'{}' uses unsupported compression method {}", name, method));
    }
    if (crc_of(data) != crc) invalid(fmt::format("CRC mismatch in '{}'", name));
    entries.push_back({std::move(name), std::move(data)});
  }
  return entries;
}

std::vector<std::uint8_t> zip_write(const std::vector<ZipEntry>& entries, bool store_only) {
  struct Record {
    std::uint16_t method;
    std::uint32_t crc;
    std::uint32_t csize;
    std::uint32_t usize;
    std::uint32_t offset;
  };
  Writer w;
  std::vector<Record> records;
  for (const auto& e : entries) {
    if (e.data.size() >= 0xffffffffu || e.name.size() > 0xffff) {
      throw Error(Errc::InvalidArgument, fmt::format("'{}' needs zip64", e.name));
    }
    std::vector<std::uint8_t> packed;
    std::uint16_t method = kStored;
    if (!store_only) {
      packed = deflate_raw(e.data);
      if (packed.size() < e.data.size()) method = kDeflated;
    }
    const std::span<const std::uint8_t> body =
        method == kDeflated ? std::span<const std::uint8_t>(packed) : std::span(e.data);
    const Record rec{method, crc_of(e.data), static_cast<std::uint32_t>(body.size()),
                     static_cast<std::uint32_t>(e.data.size()), static_cast<std::uint32_t>(w.size())};
    w.u32(kLocalSig);
    w.u16(20);
    w.u16(kFlagUtf8);
    w.u16(rec.method);
    w.u16(kDosTime);
    w.u16(kDosDate);
    w.u32(rec.crc);
    w.u32(rec.csize);
    w.u32(rec.usize);
    w.u16(static_cast<std::uint16_t>(e.name.size()));
    w.u16(0);
    w.text(e.name);
    w.bytes(body);
    records.push_back(rec);
  }
  const auto cd_offset = static_cast<std::uint32_t>(w.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& rec = records[i];
    w.u32(kCentralSig);
    w.u16(20);
    w.u16(20);
    w.u16(kFlagUtf8);
    w.u16(rec.method);
    w.u16(kDosTime);
    w.u16(kDosDate);
    w.u32(rec.crc);
    w.u32(rec.csize);
    w.u32(rec.usize);
    w.u16(static_cast<std::uint16_t>(entries[i].name.size()));
    w.u16(0);
    w.u16(0);
    w.u16(0);
    w.u16(0);
    w.u32(0);
    w.u32(rec.offset);
    w.text(entries[i].name);
  }
  const auto cd_size = static_cast<std::uint32_t>(w.size() - cd_offset);
  w.u32(kEndSig);
  w.u16(0);
  w.u16(0);
  w.u16(static_cast<std::uint16_t>(entries.size()));
  w.u16(static_cast<std::uint16_t>(entries.size()));
  w.u32(cd_size);
  w.u32(cd_offset);
  w.u16(0);
  return w.release();
}

}  // namespace odr
