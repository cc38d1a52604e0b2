#pragma once

#include <array>
#include <istream>
#include <streambuf>
#include <string>

#include <zlib.h>

namespace anchorlink::cli {

/// Read-only istream over a gzip file.
class GzipInput : public std::istream {
 public:
  explicit GzipInput(const std::string& path) : std::istream(&buffer_), buffer_(path) {
    if (!buffer_.is_open()) setstate(std::ios::failbit);
  }

 private:
  class Buffer : public std::streambuf {
   public:
    explicit Buffer(const std::string& path) : file_(gzopen(path.c_str(), "rb")) {}
    ~Buffer() override {
      if (file_) gzclose(file_);
    }
    Buffer(const Buffer&) = delete;
    Buffer& operator=(const Buffer&) = delete;

    bool is_open() const { return file_ != nullptr; }

   protected:
    int_type underflow() override {
      if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
      if (!file_) return traits_type::eof();
      const int n = gzread(file_, data_.data(), static_cast<unsigned>(data_.size()));
      if (n <= 0) return traits_type::eof();
      setg(data_.data(), data_.data(), data_.data() + n);
      return traits_type::to_int_type(*gptr());
    }

   private:
    gzFile file_;
    std::array<char, 1 << 16> data_{};
  };

  Buffer buffer_;
};

}  // namespace anchorlink::cli
