#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relxl {

/// Malformed or semantically invalid input (bad JSON, labels < 2, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured element cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::size_t partial_count)
      : std::runtime_error(what + " (cap reached after " + std::to_string(partial_count) +
                           " elements)"),
        partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

}  // namespace relxl
