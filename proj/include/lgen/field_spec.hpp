#pragma once

// Compact text form for field lists: "scalar 1 2 1; fermionL 3 2 1/3".
// Each entry is kind (scalar, fermionL, fermionR), SU(3) rep (1, 3, -3 or
// 3bar), SU(2) rep (1, 2, 3) and a hypercharge p or p/q.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgen/fields.hpp"

namespace lgen {

class FieldSpecError : public std::invalid_argument {
public:
  FieldSpecError(std::size_t position, const std::string& what)
      : std::invalid_argument("at character " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Non-reduced charges keep their spelling. Throws FieldSpecError.
std::vector<Field> parse_field_spec(std::string_view spec);

std::string format_field_spec(const std::vector<Field>& fields);

}  // namespace lgen
