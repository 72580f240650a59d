#pragma once

#include "nmp/belief.hpp"

namespace nmp {

/// Degree of conflict between belief in S and belief in its complement:
/// 2 * min(Bel(S), Bel(~S)), clamped to [0, 1]. Reaches 1 only when both
/// beliefs equal 0.5.
///
/// Throws InvalidArgument when either belief lies outside [0, 1] or when
/// their sum exceeds 1 by more than 1e-9.
double conflict(double bel_s, double bel_complement);

/// conflict(Bel(S), Bel(~S)) read off a mass function.
double conflict(const MassFunction& m, Subset s);

/// Significance of a conflict degree: conflict^gamma. Larger gamma demands
/// more conflict before it counts. Throws InvalidArgument for gamma <= 0 or
/// a degree outside [0, 1].
double significance(double conflict_degree, double gamma);

}  // namespace nmp
