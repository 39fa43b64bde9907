#pragma once

#include <string>

#include "qloz/lattice.hpp"
#include "qloz/qpoly.hpp"

namespace qloz {

/// Bit-exact interchange format {"poly": [[exponent, "coefficient"], ...]}
/// with ascending exponents and decimal coefficient strings.
std::string qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const std::string& text);  // throws ParseError

/// {"family": "hex"|"k"|"q"|"b"|"f", "params": {"a": 1, ...}}; missing
/// parameters default to 0, unknown ones are rejected.
std::string region_spec_to_json(const RegionSpec& spec);
RegionSpec region_spec_from_json(const std::string& text);  // throws ParseError

}  // namespace qloz
