#pragma once

#include <stdexcept>
#include <string>

namespace scarf {

enum class ErrorKind {
  parse,
  incompatible_rings,
  invalid_argument,
  not_found,
  limit_exceeded,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library is an Error; the C API maps the kind
// onto a status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when an enumeration would exceed a configured size cap.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t partial_count)
      : Error(ErrorKind::limit_exceeded, what), partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

}  // namespace scarf
