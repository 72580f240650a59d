#pragma once

// Frames of discernment, mass functions, and Dempster-Shafer algebra.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nmp {

/// A subset of a frame, encoded as a bitmask: bit i is set iff the frame's
/// i-th label belongs to the subset.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  int size() const;

  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }

  constexpr auto operator<=>(const Subset&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Ordered, duplicate-free list of hypothesis labels. Label i maps to bit i.
/// Copies share the label storage.
class Frame {
 public:
  static constexpr std::size_t kMaxLabels = 16;

  /// Throws InvalidArgument on an empty list, more than 16 labels, an empty
  /// label, or a duplicate.
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_->size(); }
  const std::vector<std::string>& labels() const { return *labels_; }

  Subset theta() const { return Subset((std::uint32_t{1} << size()) - 1); }
  Subset complement(Subset s) const;
  bool contains(Subset s) const { return s.is_subset_of(theta()); }

  std::optional<std::size_t> index_of(std::string_view label) const;
  Subset singleton(std::string_view label) const;
  /// Throws InvalidArgument for a label not in the frame.
  Subset subset(std::span<const std::string> labels) const;
  Subset subset(std::initializer_list<std::string_view> labels) const;

  std::vector<std::string> labels_of(Subset s) const;
  /// "{H1,H2}"
  std::string format(Subset s) const;

  bool operator==(const Frame& other) const;

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

Frame make_frame(std::vector<std::string> labels);

/// Basic probability assignment over a frame. Focal elements are non-empty,
/// carry strictly positive mass, and their masses sum to 1.
class MassFunction {
 public:
  using Focal = std::map<Subset, double>;

  /// Entries may repeat a subset; repeated values are summed. The total must
  /// lie within 1e-6 of 1 and is then renormalized exactly.
  static MassFunction from_assignments(
      const Frame& frame, std::span<const std::pair<Subset, double>> entries);
  static MassFunction from_assignments(
      const Frame& frame,
      std::initializer_list<std::pair<Subset, double>> entries);

  /// All mass on the universal set.
  static MassFunction vacuous(const Frame& frame);

  const Frame& frame() const { return frame_; }
  const Focal& focal() const { return focal_; }

  /// m(A); zero for non-focal subsets.
  double mass(Subset s) const;
  double theta_mass() const { return mass(frame_.theta()); }
  bool is_vacuous() const;

 private:
  MassFunction(Frame frame, Focal focal)
      : frame_(std::move(frame)), focal_(std::move(focal)) {}

  friend MassFunction dempster_combine(const MassFunction&,
                                       const MassFunction&);
  friend MassFunction discount(const MassFunction&, double);

  Frame frame_;
  Focal focal_;
};

/// Bel(S): total mass of focal elements contained in S.
double belief(const MassFunction& m, Subset s);

/// Pl(S) = 1 - Bel(complement of S).
double plausibility(const MassFunction& m, Subset s);

/// Mass of focal pairs with empty intersection (Dempster's K).
double conflict_mass(const MassFunction& a, const MassFunction& b);

/// Dempster's rule of combination. Throws FrameMismatch for different frames
/// and TotalConflict when K >= 1 - 1e-12.
MassFunction dempster_combine(const MassFunction& a, const MassFunction& b);

/// Moves a fraction `rate` of every mass onto the universal set.
MassFunction discount(const MassFunction& m, double rate);

/// Left fold of dempster_combine. Throws InvalidArgument on an empty list.
MassFunction combine_all(std::span<const MassFunction> ms);

}  // namespace nmp
