#pragma once

#include <zlib.h>

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace weft::detail {

/// Buffered file writer; gzip-compressed when `compress` is set. zlib writes
/// a zero mtime in the gzip header, so output bytes depend only on content.
class OutFile {
 public:
  OutFile(const std::filesystem::path& path, bool compress);
  ~OutFile();
  OutFile(const OutFile&) = delete;
  OutFile& operator=(const OutFile&) = delete;

  void write(std::string_view bytes);
  /// Flushes and closes; throws IoError on failure.
  void close();

 private:
  void flush();

  std::filesystem::path path_;
  gzFile file_ = nullptr;
  std::string buffer_;
};

/// Buffered reader over plain or gzip files (detected from the stream).
class InFile {
 public:
  explicit InFile(const std::filesystem::path& path);
  ~InFile();
  InFile(const InFile&) = delete;
  InFile& operator=(const InFile&) = delete;

  /// Reads up to n bytes; returns the count read (0 at end of file).
  std::size_t read(char* dst, std::size_t n);
  /// Throws FormatError if fewer than n bytes remain.
  void read_exact(char* dst, std::size_t n);
  /// Next line without its terminator (LF or CRLF); false at end of file.
  bool getline(std::string& line);
  bool at_end();

 private:
  bool fill();

  std::filesystem::path path_;
  gzFile file_ = nullptr;
  std::string buffer_;
  std::size_t pos_ = 0;
};

}  // namespace weft::detail
