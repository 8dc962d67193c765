#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace spencer {

/// Bad input: malformed documents, violated preconditions, mismatched rings.
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
  ValidationError(std::string pointer, const std::string& what)
      : std::invalid_argument(pointer.empty() ? what : pointer + ": " + what),
        pointer_(std::move(pointer)) {}

  /// JSON pointer of the offending key, empty when not tied to a document.
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// A checked postcondition failed. Should be unreachable; the CLI maps it to exit 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace spencer
