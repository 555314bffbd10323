#pragma once

#include "toricfan/fan.hpp"

#include <string>
#include <string_view>

namespace toricfan {

/// A fan read from the JSON interchange document:
///   {"name": "...", "ambient_dim": d, "rays": [[...], ...],
///    "maximal_cones": [[ray indices] | [[inline vector], ...], ...]}
/// An empty cone entry is the zero cone. Integers may be JSON numbers or
/// decimal strings (for values beyond 64 bits).
struct FanDocument {
  std::string name;
  Fan fan;
};

/// Throws Error(ParseError) with a line (syntax) or field locus (schema);
/// NotAFan / NotPointed / DimensionMismatch pass through from Fan::build.
FanDocument parse_fan(std::string_view text);

}  // namespace toricfan
