#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace viewsel {

/// Malformed file or document. `offset()` is the byte position where
/// decoding stopped.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace viewsel
