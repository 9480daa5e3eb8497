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

#include "odr/package/fetch.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <system_error>

#include <fmt/format.h>

#include "httplib.h"

#include "odr/error.hpp"
#include "odr/io.hpp"
#include "odr/package/manifest.hpp"
#include "odr/package/package.hpp"
#include "odr/package/sha256.hpp"
#include "odr/package/zip.hpp"

namespace odr {

namespace fs = std::filesystem;

namespace {

enum class Scheme { File, Http };

struct Source {
  Scheme scheme;
  std::string location;  // filesystem path or full URL
};

Source parse_uri(std::string_view uri) {
  constexpr std::string_view kFile = "file://";
  if (uri.starts_with(kFile)) {
    std::string path(uri.substr(kFile.size()));
    if (path.empty()) throw Error(Errc::UnsupportedScheme, "file:// URI has no path");
    return {Scheme::File, std::move(path)};
  }
  if (uri.starts_with("http://") || uri.starts_with("https://")) {
    return {Scheme::Http, std::string(uri)};
  }
  throw Error(Errc::UnsupportedScheme, std::string(uri));
}

class FileLock {
 public:
  explicit FileLock(const fs::path& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw Error(Errc::IoError, fmt::format("cannot open lock {}", path.string()));
    while (::flock(fd_, LOCK_EX) != 0) {
      if (errno != EINTR) {
        ::close(fd_);
        throw Error(Errc::IoError, fmt::format("cannot lock {}", path.string()));
      }
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

fs::path entry_dir(const fs::path& cache_dir, const std::string& digest) {
  return cache_dir / digest.substr(0, 2) / digest;
}

fs::path unique_temp(const fs::path& cache_dir) {
  static std::atomic<unsigned> counter{0};
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  return cache_dir / "tmp" / fmt::format("{}-{}-{}", ::getpid(), stamp, counter++);
}

std::vector<std::uint8_t> http_get(const std::string& url) {
  // Split into scheme://host[:port] and path.
  const auto scheme_end = url.find("://");
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(std::chrono::seconds(10));
  client.set_read_timeout(std::chrono::seconds(60));
  auto res = client.Get(path);
  if (!res) {
    throw Error(Errc::TransferFailed, fmt::format("{}: {}", url, httplib::to_string(res.error())));
  }
  if (res->status != 200) {
    throw Error(Errc::TransferFailed, fmt::format("{}: HTTP {}", url, res->status));
  }
  return {res->body.begin(), res->body.end()};
}

// Locates the package root inside an extracted tree: either the tree itself or
// its single top-level directory.
fs::path package_root_in(const fs::path& tree) {
  if (fs::exists(tree / kManifestFileName)) return tree;
  std::vector<fs::path> children;
  for (const auto& e : fs::directory_iterator(tree)) children.push_back(e.path());
  if (children.size() == 1 && fs::is_directory(children[0]) &&
      fs::exists(children[0] / kManifestFileName)) {
    return children[0];
  }
  throw Error(Errc::InvalidArchive, "archive holds no manifest.json");
}

void extract_zip(std::span<const std::uint8_t> archive, const fs::path& dest) {
  for (auto& entry : zip_read(archive)) {
    try {
      check_payload_path(entry.name);
    } catch (const Error&) {
      throw Error(Errc::InvalidArchive, fmt::format("entry escapes archive root: {}", entry.name));
    }
    write_file(dest / entry.name, entry.data);
  }
}

void validate_as_archive(const fs::path& root) {
  try {
    package_validate(root);
  } catch (const Error& e) {
    throw Error(Errc::InvalidArchive, e.what());
  }
}

void check_expected(const std::string& digest, const std::optional<std::string>& expected) {
  if (expected && *expected != digest) {
    throw Error(Errc::DigestMismatch, fmt::format("expected {}, got {}", *expected, digest));
  }
}

// Moves a fully validated tree into the cache. A concurrent writer for a
// different URI with the same content may have won; that entry is reused.
void install(const fs::path& staged_root, const fs::path& dest) {
  fs::create_directories(dest.parent_path());
  std::error_code ec;
  fs::rename(staged_root, dest, ec);
  if (ec && !fs::exists(dest / kManifestFileName)) {
    throw Error(Errc::IoError, fmt::format("cannot install {}: {}", dest.string(), ec.message()));
  }
}

struct TempTree {
  fs::path path;
  ~TempTree() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

fs::path package_fetch(std::string_view uri, const fs::path& cache_dir,
                       std::optional<std::string> expected_sha256) {
  const Source source = parse_uri(uri);
  if (expected_sha256 && !is_sha256_hex(*expected_sha256)) {
    throw Error(Errc::InvalidArgument, fmt::format("not a SHA-256 digest: {}", *expected_sha256));
  }

  const std::string uri_key = sha256_hex(uri);
  fs::create_directories(cache_dir / "locks");
  fs::create_directories(cache_dir / "refs");
  fs::create_directories(cache_dir / "tmp");
  const fs::path ref_file = cache_dir / "refs" / uri_key;
  FileLock lock(cache_dir / "locks" / (uri_key + ".lock"));

  auto drop = [&](const std::string& digest) {
    std::error_code ec;
    fs::remove_all(entry_dir(cache_dir, digest), ec);
    fs::remove(ref_file, ec);
  };

  // Cache hit: resolved through the URI reference without touching the source.
  if (fs::exists(ref_file)) {
    const std::string digest = read_text_file(ref_file);
    const fs::path dest = entry_dir(cache_dir, digest);
    if (is_sha256_hex(digest) && fs::exists(dest / kManifestFileName)) {
      if (expected_sha256 && *expected_sha256 != digest) {
        drop(digest);
        check_expected(digest, expected_sha256);
      }
      return dest;
    }
    std::error_code ec;
    fs::remove(ref_file, ec);
  }

  TempTree staging{unique_temp(cache_dir)};
  fs::create_directories(staging.path);
  std::string digest;
  fs::path staged_root;

  if (source.scheme == Scheme::File && fs::is_directory(source.location)) {
    const fs::path src = source.location;
    if (!fs::exists(src / kManifestFileName)) {
      throw Error(Errc::InvalidArchive, fmt::format("{} holds no manifest.json", src.string()));
    }
    digest = sha256_hex(read_file(src / kManifestFileName));
    staged_root = staging.path / "pkg";
    fs::copy(src, staged_root, fs::copy_options::recursive);
  } else {
    std::vector<std::uint8_t> archive;
    if (source.scheme == Scheme::File) {
      try {
        archive = read_file(source.location);
      } catch (const Error& e) {
        throw Error(Errc::TransferFailed, e.what());
      }
    } else {
      archive = http_get(source.location);
    }
    digest = sha256_hex(archive);
    check_expected(digest, expected_sha256);
    const fs::path tree = staging.path / "tree";
    fs::create_directories(tree);
    extract_zip(archive, tree);
    staged_root = package_root_in(tree);
  }

  validate_as_archive(staged_root);
  const fs::path dest = entry_dir(cache_dir, digest);
  if (expected_sha256 && *expected_sha256 != digest) {
    drop(digest);
    check_expected(digest, expected_sha256);
  }
  if (!fs::exists(dest / kManifestFileName)) install(staged_root, dest);
  write_text_file(ref_file, digest);
  return dest;
}

}  // namespace odr
