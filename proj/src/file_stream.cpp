#include "file_stream.hpp"

#include <algorithm>
#include <cstring>

#include "weft/error.hpp"

namespace weft::detail {

namespace {
constexpr std::size_t kChunk = 1 << 16;
}

OutFile::OutFile(const std::filesystem::path& path, bool compress) : path_(path) {
  file_ = gzopen(path.c_str(), compress ? "wb6" : "wbT");
  if (!file_) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  buffer_.reserve(kChunk);
}

OutFile::~OutFile() {
  if (file_) gzclose(file_);
}

void OutFile::flush() {
  if (buffer_.empty()) return;
  const int written = gzwrite(file_, buffer_.data(), static_cast<unsigned>(buffer_.size()));
  if (written != static_cast<int>(buffer_.size())) {
    throw Error(ErrorCode::IoError, "write to '" + path_.string() + "' failed");
  }
  buffer_.clear();
}

void OutFile::write(std::string_view bytes) {
  if (buffer_.size() + bytes.size() > kChunk) flush();
  if (bytes.size() > kChunk) {
    buffer_.assign(bytes);
    flush();
    return;
  }
  buffer_.append(bytes);
}

void OutFile::close() {
  flush();
  const int rc = gzclose(file_);
  file_ = nullptr;
  if (rc != Z_OK) throw Error(ErrorCode::IoError, "closing '" + path_.string() + "' failed");
}

InFile::InFile(const std::filesystem::path& path) : path_(path) {
  file_ = gzopen(path.c_str(), "rb");
  if (!file_) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
}

InFile::~InFile() {
  if (file_) gzclose(file_);
}

bool InFile::fill() {
  buffer_.erase(0, pos_);
  pos_ = 0;
  const std::size_t old = buffer_.size();
  buffer_.resize(old + kChunk);
  const int got = gzread(file_, buffer_.data() + old, static_cast<unsigned>(kChunk));
  if (got < 0) {
    int err = 0;
    throw Error(ErrorCode::IoError, "read from '" + path_.string() + "' failed: " + gzerror(file_, &err));
  }
  buffer_.resize(old + static_cast<std::size_t>(got));
  return got > 0;
}

std::size_t InFile::read(char* dst, std::size_t n) {
  std::size_t done = 0;
  while (done < n) {
    if (pos_ == buffer_.size() && !fill()) break;
    const std::size_t take = std::min(n - done, buffer_.size() - pos_);
    std::memcpy(dst + done, buffer_.data() + pos_, take);
    pos_ += take;
    done += take;
  }
  return done;
}

void InFile::read_exact(char* dst, std::size_t n) {
  if (read(dst, n) != n) throw Error(ErrorCode::FormatError, "unexpected end of file in '" + path_.string() + "'");
}

bool InFile::at_end() { return pos_ == buffer_.size() && !fill(); }

bool InFile::getline(std::string& line) {
  line.clear();
  for (;;) {
    if (pos_ == buffer_.size() && !fill()) return !line.empty();
    const auto nl = buffer_.find('\n', pos_);
    if (nl == std::string::npos) {
      line.append(buffer_, pos_, std::string::npos);
      pos_ = buffer_.size();
      continue;
    }
    line.append(buffer_, pos_, nl - pos_);
    pos_ = nl + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
}

}  // namespace weft::detail
