#pragma once

// Independent reference implementations used only by tests. They work on
// dense tables and plain recursion, sharing no code paths with the library
// algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nmp/belief.hpp"
#include "nmp/network.hpp"

namespace nmp::oracle {

/// Dense mass table indexed by subset bitmask (index 0 is the empty set).
inline std::vector<double> dense(const MassFunction& m) {
  std::vector<double> t(std::size_t{1} << m.frame().size(), 0.0);
  for (const auto& [s, v] : m.focal()) t[s.bits()] = v;
  return t;
}

/// Dempster's rule by enumerating the full 2^n x 2^n product table.
/// Returns nullopt when every product lands on the empty set.
inline std::optional<std::vector<double>> brute_force_combine(
    const MassFunction& a, const MassFunction& b) {
  const auto ta = dense(a);
  const auto tb = dense(b);
  std::vector<double> out(ta.size(), 0.0);
  double kept = 0.0;
  for (std::size_t x = 0; x < ta.size(); ++x) {
    for (std::size_t y = 0; y < tb.size(); ++y) {
      if (ta[x] == 0.0 || tb[y] == 0.0) continue;
      const std::size_t meet = x & y;
      if (meet == 0) continue;
      out[meet] += ta[x] * tb[y];
      kept += ta[x] * tb[y];
    }
  }
  if (kept <= 0.0) return std::nullopt;
  for (auto& v : out) v /= kept;
  return out;
}

/// Bel(S) straight from a dense table.
inline double brute_force_belief(const std::vector<double>& table,
                                 std::uint32_t s) {
  double bel = 0.0;
  for (std::uint32_t a = 1; a < table.size(); ++a) {
    if ((a & ~s) == 0) bel += table[a];
  }
  return bel;
}

/// Foundations by explicit enumeration of every reason chain starting in the
/// target's support list. Keys are pair indices and element references.
struct ChainDegrees {
  std::map<std::size_t, double> pair;
  std::map<ElementRef, double> element;
};

inline ChainDegrees enumerate_chains(const Network& net, const Beliefs& beliefs,
                                     ElementRef target) {
  ChainDegrees out;
  std::function<void(ElementRef, double)> walk = [&](ElementRef x,
                                                     double strength) {
    for (std::size_t p : net.support_list(x)) {
      const SupportPair& pair = net.pairs()[p];
      double out_degree = 1.0;
      if (pair.statement) {
        out_degree = std::min(out_degree, beliefs[*pair.statement].theta_mass());
      }
      if (pair.rule) {
        const auto& r = net.rules()[*pair.rule];
        const double theta =
            (1.0 - r.discount) * r.base.theta_mass() + r.discount;
        out_degree = std::min(out_degree, theta);
      }
      const double link = std::min(strength, 1.0 - out_degree);
      auto bump = [](auto& map, auto key, double v) {
        auto [it, inserted] = map.emplace(key, v);
        if (!inserted) it->second = std::max(it->second, v);
      };
      bump(out.pair, p, link);
      if (pair.statement) {
        const auto s = ElementRef::statement(*pair.statement);
        bump(out.element, s, link);
        walk(s, link);
      }
      if (pair.rule) {
        const auto r = ElementRef::rule(*pair.rule);
        bump(out.element, r, link);
        walk(r, link);
      }
    }
  };
  walk(target, 1.0);
  return out;
}

}  // namespace nmp::oracle
