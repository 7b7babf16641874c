#include "lbd/gzio.hpp"

#include <zlib.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "lbd/errors.hpp"

namespace lbd {

namespace {
constexpr std::size_t kBufSize = 1 << 16;
}

// ===== GzReader =====

struct GzReader::Impl {
  std::string path;
  std::ifstream in;
  z_stream zs{};
  bool compressed = false;
  bool stream_done = false;
  std::vector<unsigned char> src = std::vector<unsigned char>(kBufSize);
  std::vector<unsigned char> dst = std::vector<unsigned char>(kBufSize);
  std::string pending;  // decompressed bytes not yet handed out
  std::size_t pending_pos = 0;
  bool eof = false;

  explicit Impl(const std::string& p) : path(p), in(p, std::ios::binary) {
    if (!in) throw FixtureError("cannot open file: " + p, p);
    int c0 = in.get();
    int c1 = in.peek();
    in.unget();
    compressed = (c0 == 0x1f && c1 == 0x8b);
    if (compressed) {
      zs.zalloc = Z_NULL;
      zs.zfree = Z_NULL;
      zs.opaque = Z_NULL;
      if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK)
        throw DataError("inflate init failed for " + p);
    }
  }

  ~Impl() {
    if (compressed) inflateEnd(&zs);
  }

  // Refills `pending`; returns false when no more bytes exist.
  bool refill() {
    if (eof) return false;
    pending.erase(0, pending_pos);
    pending_pos = 0;
    if (!compressed) {
      in.read(reinterpret_cast<char*>(src.data()), static_cast<std::streamsize>(src.size()));
      std::streamsize got = in.gcount();
      if (got <= 0) {
        eof = true;
        return false;
      }
      pending.append(reinterpret_cast<char*>(src.data()), static_cast<std::size_t>(got));
      return true;
    }
    while (true) {
      if (zs.avail_in == 0 && !stream_done) {
        in.read(reinterpret_cast<char*>(src.data()), static_cast<std::streamsize>(src.size()));
        std::streamsize got = in.gcount();
        if (got <= 0) {
          // Ran out of file while the stream still expects data.
          throw DataError("truncated gzip stream: " + path);
        }
        zs.next_in = src.data();
        zs.avail_in = static_cast<uInt>(got);
      }
      zs.next_out = dst.data();
      zs.avail_out = static_cast<uInt>(dst.size());
      int rc = inflate(&zs, Z_NO_FLUSH);
      if (rc == Z_STREAM_END) {
        stream_done = true;
        eof = true;
      } else if (rc != Z_OK && rc != Z_BUF_ERROR) {
        throw DataError("corrupt gzip stream: " + path);
      }
      std::size_t produced = dst.size() - zs.avail_out;
      if (produced > 0) {
        pending.append(reinterpret_cast<char*>(dst.data()), produced);
        return true;
      }
      if (eof) return false;
      if (rc == Z_BUF_ERROR && zs.avail_in == 0 && in.eof())
        throw DataError("truncated gzip stream: " + path);
    }
  }
};

GzReader::GzReader(const std::string& path) : impl_(std::make_unique<Impl>(path)) {}
GzReader::~GzReader() = default;

bool GzReader::getline(std::string& out) {
  out.clear();
  bool got_any = false;
  while (true) {
    auto& buf = impl_->pending;
    std::size_t pos = buf.find('\n', impl_->pending_pos);
    if (pos != std::string::npos) {
      out.append(buf, impl_->pending_pos, pos - impl_->pending_pos);
      impl_->pending_pos = pos + 1;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      return true;
    }
    if (impl_->pending_pos < buf.size()) {
      out.append(buf, impl_->pending_pos, buf.size() - impl_->pending_pos);
      impl_->pending_pos = buf.size();
      got_any = true;
    }
    if (!impl_->refill()) {
      if (!out.empty() && out.back() == '\r') out.pop_back();
      return got_any && !out.empty();
    }
  }
}

// ===== GzWriter =====

struct GzWriter::Impl {
  std::string path;
  std::ofstream out;
  z_stream zs{};
  std::vector<unsigned char> dst = std::vector<unsigned char>(kBufSize);
  bool open = true;

  Impl(const std::string& p, int level) : path(p), out(p, std::ios::binary) {
    if (!out) throw DataError("cannot create file: " + p);
    zs.zalloc = Z_NULL;
    zs.zfree = Z_NULL;
    zs.opaque = Z_NULL;
    // 16+MAX_WBITS selects the gzip container; zlib writes a zero mtime when
    // no explicit header is supplied, keeping output byte-stable.
    if (deflateInit2(&zs, level, Z_DEFLATED, 16 + MAX_WBITS, 9, Z_DEFAULT_STRATEGY) != Z_OK)
      throw DataError("deflate init failed for " + p);
  }

  ~Impl() {
    if (open) finish();
  }

  void pump(int flush) {
    do {
      zs.next_out = dst.data();
      zs.avail_out = static_cast<uInt>(dst.size());
      int rc = deflate(&zs, flush);
      if (rc == Z_STREAM_ERROR) throw DataError("deflate failed for " + path);
      std::size_t produced = dst.size() - zs.avail_out;
      if (produced > 0)
        out.write(reinterpret_cast<char*>(dst.data()), static_cast<std::streamsize>(produced));
    } while (zs.avail_out == 0);
  }

  void finish() {
    zs.next_in = Z_NULL;
    zs.avail_in = 0;
    pump(Z_FINISH);
    deflateEnd(&zs);
    out.close();
    open = false;
    if (!out) throw DataError("write failed for " + path);
  }
};

GzWriter::GzWriter(const std::string& path, int level)
    : impl_(std::make_unique<Impl>(path, level)) {}

GzWriter::~GzWriter() = default;

void GzWriter::write(std::string_view data) {
  if (!impl_->open) throw DataError("write on closed stream: " + impl_->path);
  std::size_t off = 0;
  while (off < data.size()) {
    std::size_t chunk = std::min<std::size_t>(data.size() - off, 1u << 20);
    impl_->zs.next_in =
        reinterpret_cast<unsigned char*>(const_cast<char*>(data.data() + off));
    impl_->zs.avail_in = static_cast<uInt>(chunk);
    impl_->pump(Z_NO_FLUSH);
    off += chunk;
  }
}

void GzWriter::close() {
  if (impl_->open) impl_->finish();
}

// ===== plain-file helpers =====

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot open file: " + path, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot create file: " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw DataError("write failed for " + path);
}

bool file_exists(const std::string& path) {
  std::error_code ec;
  return std::filesystem::exists(path, ec);
}

}  // namespace lbd
