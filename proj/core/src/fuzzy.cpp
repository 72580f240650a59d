#include "nmp/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nmp/error.hpp"

namespace nmp {
namespace {

constexpr double kSlack = 1e-9;

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

double conflict(double bel_s, double bel_complement) {
  if (!in_unit(bel_s) || !in_unit(bel_complement)) {
    std::ostringstream msg;
    msg << "belief values (" << bel_s << ", " << bel_complement
        << ") outside [0, 1]";
    throw InvalidArgument(msg.str());
  }
  if (bel_s + bel_complement > 1.0 + kSlack) {
    std::ostringstream msg;
    msg << "Bel(S) + Bel(~S) = " << bel_s + bel_complement << " exceeds 1";
    throw InvalidArgument(msg.str());
  }
  return std::clamp(2.0 * std::min(bel_s, bel_complement), 0.0, 1.0);
}

double conflict(const MassFunction& m, Subset s) {
  return conflict(belief(m, s), belief(m, m.frame().complement(s)));
}

double significance(double conflict_degree, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    std::ostringstream msg;
    msg << "significance exponent gamma = " << gamma << " must be positive";
    throw InvalidArgument(msg.str());
  }
  if (!in_unit(conflict_degree)) {
    std::ostringstream msg;
    msg << "conflict degree " << conflict_degree << " outside [0, 1]";
    throw InvalidArgument(msg.str());
  }
  return std::clamp(std::pow(conflict_degree, gamma), 0.0, 1.0);
}

}  // namespace nmp
