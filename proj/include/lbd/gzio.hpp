#pragma once

#include <cstdio>
#include <memory>
#include <string>
#include <string_view>

namespace lbd {

// Line reader for gzip (or plain) files. Throws DataError on a corrupt or
// truncated compressed stream.
class GzReader {
 public:
  explicit GzReader(const std::string& path);
  ~GzReader();
  GzReader(const GzReader&) = delete;
  GzReader& operator=(const GzReader&) = delete;

  // Reads the next line without its terminator. Returns false at end of data.
  bool getline(std::string& out);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Gzip writer with a fixed header (zero mtime): identical content always
// produces identical bytes on disk.
class GzWriter {
 public:
  explicit GzWriter(const std::string& path, int level = 6);
  ~GzWriter();
  GzWriter(const GzWriter&) = delete;
  GzWriter& operator=(const GzWriter&) = delete;

  void write(std::string_view data);
  void close();  // flushes and finalizes; called by the destructor if needed

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Whole-file helpers for plain (uncompressed) files.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);
bool file_exists(const std::string& path);

}  // namespace lbd
