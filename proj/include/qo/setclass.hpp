#pragma once

// Pitch-class sets in Z_N, their transposition classes (set classes of
// T_n-type) and the subset order between classes.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qo/order.hpp"

namespace qo {

/// Largest supported number of tones per octave.
inline constexpr int kMaxEdo = 24;

/// A subset of Z_edo, stored as a bitmask (bit x set iff x is a member).
class PitchClassSet {
 public:
  using Mask = std::uint32_t;

  PitchClassSet(int edo, std::span<const int> members);
  static PitchClassSet from_mask(int edo, Mask mask);

  int edo() const noexcept { return edo_; }
  Mask mask() const noexcept { return mask_; }
  int cardinality() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(int pc) const noexcept { return pc >= 0 && pc < edo_ && ((mask_ >> pc) & 1u); }

  /// Members in ascending order.
  std::vector<int> members() const;

  /// T_n: every member x becomes x + n (mod edo). Negative n is allowed.
  PitchClassSet transposed(int n) const;

  bool is_subset_of(const PitchClassSet& other) const;

  friend bool operator==(const PitchClassSet&, const PitchClassSet&) = default;

  /// Lexicographic order of the ascending member sequences (edo first).
  friend std::strong_ordering operator<=>(const PitchClassSet& a, const PitchClassSet& b);

 private:
  PitchClassSet(int edo, Mask mask) : edo_(edo), mask_(mask) {}

  int edo_;
  Mask mask_;
};

/// Brace notation, e.g. "{0,4,7}"; the empty set prints as "{}".
std::string to_brace(const PitchClassSet& pcs);

/// A transposition orbit, identified by its canonical representative: the
/// member whose ascending sequence is lexicographically least. Nonempty
/// representatives contain 0.
class SetClass {
 public:
  int edo() const noexcept { return rep_.edo(); }
  const PitchClassSet& rep() const noexcept { return rep_; }
  int cardinality() const noexcept { return rep_.cardinality(); }

  friend bool operator==(const SetClass&, const SetClass&) = default;
  friend std::strong_ordering operator<=>(const SetClass& a, const SetClass& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  explicit SetClass(PitchClassSet rep) : rep_(rep) {}
  friend SetClass canonical_form(const PitchClassSet& pcs);

  PitchClassSet rep_;
};

inline std::string to_brace(const SetClass& c) { return to_brace(c.rep()); }

/// Scalar steps of a class, in step units of Z_N. seconds[i] spans from the
/// i-th member to the next (cyclically); thirds[i] = seconds[i] + seconds[i+1].
struct SpanProfile {
  std::vector<int> seconds;
  std::vector<int> thirds;
};

SetClass canonical_form(const PitchClassSet& pcs);

/// Number of transposition orbits on 2^{Z_N}: (1/N) sum_{d|N} phi(d) 2^{N/d}.
std::uint64_t burnside_count(int edo);

/// Every set class of Z_edo, the empty class included, sorted ascending.
std::vector<SetClass> enumerate_set_classes(int edo);

/// True iff some transposition of a's representative is contained in b's.
bool class_leq(const SetClass& a, const SetClass& b);

SpanProfile span_profile(const SetClass& c);

/// Nonempty classes whose scalar seconds all span at most max_second steps.
std::vector<SetClass> sck_members(int edo, int max_second);

/// Minimal elements of the subset order restricted to sck_members(), found by
/// exhaustive comparison of the induced relation.
std::vector<SetClass> sck_minimal(int edo, int max_second);

/// Classes of sck_members() whose scalar thirds all span at least
/// max_second + 1 steps.
std::vector<SetClass> sck_wide_thirds(int edo, int max_second);

/// sck_minimal(edo, k) and sck_wide_thirds(edo, k) coincide.
bool proposition1_check(int edo, int max_second);

/// The subset order restricted to `classes`, labelled in brace notation.
FiniteRelation class_order(std::span<const SetClass> classes);

/// Inclusion order on all 2^edo subsets of Z_edo (element id = bitmask),
/// and the transposition group acting on it. Meant for exhaustive checks,
/// so limited to edo <= 12.
inline constexpr int kMaxPowersetEdo = 12;
FiniteRelation powerset_inclusion(int edo);
GroupAction transposition_action(int edo);

}  // namespace qo
