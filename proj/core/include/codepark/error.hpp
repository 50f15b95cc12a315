#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codepark {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input bytes are not valid UTF-8.
class DecodeError : public Error {
 public:
  DecodeError(std::string file, std::size_t offset);
  const std::string& file() const noexcept { return file_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string file_;
  std::size_t offset_;
};

/// An offset or index outside the valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Cross-structure consistency failure (e.g. a room without walls).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace codepark
