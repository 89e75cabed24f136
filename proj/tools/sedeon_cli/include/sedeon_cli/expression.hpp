#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sedeon/sedeon.hpp"

namespace sedeon::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  /// 1-based byte column of the offending character.
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Left-to-right product of basis factors joined by '*'.
///
/// factor := [sign] ( "1" | "i" | e<d> | a<d> | e<d>a<d> ),  d in 0..3,
/// sign   := "-" | U+2212. Whitespace around factors is ignored.
[[nodiscard]] Sedeon parse_expression(std::string_view text);

}  // namespace sedeon::cli
