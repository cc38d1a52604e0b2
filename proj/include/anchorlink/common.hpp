#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace anchorlink {

/// Dense article identifier, contiguous from 0 within a corpus.
using NodeId = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed input at a known byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::uint64_t byte_offset)
      : Error(what + " (at byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::uint64_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::uint64_t byte_offset_;
};

/// A predictor was invoked in a mode it does not support.
class UnsupportedModeError : public Error {
 public:
  using Error::Error;
};

/// A metric is undefined for the given labels (e.g. no positives).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace anchorlink
