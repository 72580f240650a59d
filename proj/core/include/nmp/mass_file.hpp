#pragma once

// Mass-file format:
//
//   frame H1 H2 H3
//   mass {H1}=0.99 {H2,H3}=0.01
//   discount 0.01
//
// One frame line and one mass line; the discount line is optional. Labels
// inside braces are separated by commas or spaces.

#include <optional>
#include <string_view>

#include "nmp/belief.hpp"

namespace nmp {

struct MassFile {
  MassFunction mass;
  std::optional<double> discount;

  /// The mass with the discount (if any) applied.
  MassFunction effective() const;
};

/// Throws ParseError.
MassFile parse_mass_file(std::string_view text);

}  // namespace nmp
