#include "nmp/belief.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

#include "nmp/error.hpp"

namespace nmp {
namespace {

constexpr double kSumTolerance = 1e-6;
constexpr double kTotalConflict = 1e-12;

void check_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    throw FrameMismatch("mass functions are defined over different frames");
  }
}

void check_in_frame(const Frame& frame, Subset s) {
  if (!frame.contains(s)) {
    throw FrameMismatch("subset has bits outside the frame " +
                        frame.format(frame.theta()));
  }
}

}  // namespace

int Subset::size() const { return std::popcount(bits_); }

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidArgument("frame needs at least one label");
  if (labels.size() > kMaxLabels) {
    throw InvalidArgument("frame has " + std::to_string(labels.size()) +
                          " labels; at most 16 are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw InvalidArgument("frame label is empty");
    if (!seen.insert(label).second) {
      throw InvalidArgument("duplicate frame label '" + label + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Subset Frame::complement(Subset s) const {
  return Subset(theta().bits() & ~s.bits());
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  const auto& ls = *labels_;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return i;
  }
  return std::nullopt;
}

Subset Frame::singleton(std::string_view label) const {
  auto i = index_of(label);
  if (!i) {
    throw InvalidArgument("label '" + std::string(label) + "' not in frame " +
                          format(theta()));
  }
  return Subset(std::uint32_t{1} << *i);
}

Subset Frame::subset(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& l : labels) s = s | singleton(l);
  return s;
}

Subset Frame::subset(std::initializer_list<std::string_view> labels) const {
  Subset s;
  for (auto l : labels) s = s | singleton(l);
  return s;
}

std::vector<std::string> Frame::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (s.bits() & (std::uint32_t{1} << i)) out.push_back((*labels_)[i]);
  }
  return out;
}

std::string Frame::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(s)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

bool Frame::operator==(const Frame& other) const {
  return labels_ == other.labels_ || *labels_ == *other.labels_;
}

Frame make_frame(std::vector<std::string> labels) {
  return Frame(std::move(labels));
}

MassFunction MassFunction::from_assignments(
    const Frame& frame, std::span<const std::pair<Subset, double>> entries) {
  Focal focal;
  double total = 0.0;
  for (const auto& [s, value] : entries) {
    if (s.empty()) throw InvalidArgument("mass assigned to the empty set");
    check_in_frame(frame, s);
    if (!std::isfinite(value) || value < 0.0) {
      std::ostringstream msg;
      msg << "mass for " << frame.format(s) << " is " << value
          << "; masses must be non-negative";
      throw InvalidArgument(msg.str());
    }
    focal[s] += value;
    total += value;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg << "masses sum to " << total << ", expected 1";
    throw InvalidArgument(msg.str());
  }
  std::erase_if(focal, [](const auto& kv) { return kv.second <= 0.0; });
  for (auto& [s, v] : focal) v /= total;
  return MassFunction(frame, std::move(focal));
}

MassFunction MassFunction::from_assignments(
    const Frame& frame,
    std::initializer_list<std::pair<Subset, double>> entries) {
  return from_assignments(
      frame, std::span<const std::pair<Subset, double>>(entries.begin(),
                                                        entries.size()));
}

MassFunction MassFunction::vacuous(const Frame& frame) {
  return MassFunction(frame, Focal{{frame.theta(), 1.0}});
}

double MassFunction::mass(Subset s) const {
  auto it = focal_.find(s);
  return it == focal_.end() ? 0.0 : it->second;
}

bool MassFunction::is_vacuous() const {
  return focal_.size() == 1 && focal_.begin()->first == frame_.theta();
}

double belief(const MassFunction& m, Subset s) {
  check_in_frame(m.frame(), s);
  double bel = 0.0;
  for (const auto& [a, v] : m.focal()) {
    if (a.is_subset_of(s)) bel += v;
  }
  return std::clamp(bel, 0.0, 1.0);
}

double plausibility(const MassFunction& m, Subset s) {
  check_in_frame(m.frame(), s);
  return std::clamp(1.0 - belief(m, m.frame().complement(s)), 0.0, 1.0);
}

double conflict_mass(const MassFunction& a, const MassFunction& b) {
  check_same_frame(a.frame(), b.frame());
  double k = 0.0;
  for (const auto& [sa, va] : a.focal()) {
    for (const auto& [sb, vb] : b.focal()) {
      if ((sa & sb).empty()) k += va * vb;
    }
  }
  return k;
}

MassFunction dempster_combine(const MassFunction& a, const MassFunction& b) {
  check_same_frame(a.frame(), b.frame());
  MassFunction::Focal out;
  double k = 0.0;
  double kept = 0.0;
  for (const auto& [sa, va] : a.focal()) {
    for (const auto& [sb, vb] : b.focal()) {
      const double p = va * vb;
      const Subset x = sa & sb;
      if (x.empty()) {
        k += p;
      } else {
        out[x] += p;
        kept += p;
      }
    }
  }
  // `kept` equals 1 - K up to rounding; dividing by it keeps the result
  // normalized to machine precision.
  if (k >= 1.0 - kTotalConflict || kept <= kTotalConflict) {
    std::ostringstream msg;
    msg << "total conflict (K = " << k
        << "): Dempster's rule is indeterminate";
    throw TotalConflict(msg.str(), k);
  }
  for (auto& [s, v] : out) v /= kept;
  std::erase_if(out, [](const auto& kv) { return kv.second <= 0.0; });
  return MassFunction(a.frame(), std::move(out));
}

MassFunction discount(const MassFunction& m, double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    std::ostringstream msg;
    msg << "discount rate " << rate << " outside [0, 1]";
    throw InvalidArgument(msg.str());
  }
  if (rate == 1.0) return MassFunction::vacuous(m.frame());
  MassFunction::Focal out;
  const Subset theta = m.frame().theta();
  for (const auto& [s, v] : m.focal()) out[s] = (1.0 - rate) * v;
  out[theta] += rate;
  std::erase_if(out, [](const auto& kv) { return kv.second <= 0.0; });
  return MassFunction(m.frame(), std::move(out));
}

MassFunction combine_all(std::span<const MassFunction> ms) {
  if (ms.empty()) throw InvalidArgument("combine_all needs at least one mass");
  MassFunction acc = ms.front();
  for (const auto& m : ms.subspan(1)) acc = dempster_combine(acc, m);
  return acc;
}

}  // namespace nmp
