#include "qo/setclass.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qo/error.hpp"

namespace qo {

namespace {

using Mask = PitchClassSet::Mask;

void require_edo(int edo) {
  if (edo < 1 || edo > kMaxEdo)
    throw InvalidArgument("edo must be in 1.." + std::to_string(kMaxEdo) + ", got " + std::to_string(edo));
}

Mask full_mask(int edo) { return (Mask{1} << edo) - 1; }

// Rotate the bits of an edo-wide mask up by n (0 <= n < edo).
Mask rotate(Mask m, int n, int edo) {
  if (n == 0) return m;
  return ((m << n) | (m >> (edo - n))) & full_mask(edo);
}

// For masks of equal popcount: does a's ascending sequence precede b's? The
// lowest differing bit decides, in favour of the set that holds it.
bool seq_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

Mask canonical_mask(Mask m, int edo) {
  Mask best = m;
  for (int r = 1; r < edo; ++r) {
    const Mask t = rotate(m, r, edo);
    if (seq_less(t, best)) best = t;
  }
  return best;
}

bool is_canonical(Mask m, int edo) {
  for (int r = 1; r < edo; ++r)
    if (seq_less(rotate(m, r, edo), m)) return false;
  return true;
}

void require_span(int edo, int max_second) {
  require_edo(edo);
  if (max_second < 1 || max_second > edo)
    throw InvalidArgument("max second span must be in 1.." + std::to_string(edo) + ", got " +
                          std::to_string(max_second));
}

}  // namespace

// ---------------------------------------------------------------------------
// PitchClassSet

PitchClassSet::PitchClassSet(int edo, std::span<const int> members) : edo_(edo), mask_(0) {
  require_edo(edo);
  for (int x : members) {
    if (x < 0 || x >= edo)
      throw InvalidArgument("pitch class " + std::to_string(x) + " out of range for Z_" + std::to_string(edo));
    if (mask_ & (Mask{1} << x)) throw InvalidArgument("duplicate pitch class " + std::to_string(x));
    mask_ |= Mask{1} << x;
  }
}

PitchClassSet PitchClassSet::from_mask(int edo, Mask mask) {
  require_edo(edo);
  if (mask & ~full_mask(edo)) throw InvalidArgument("mask has bits outside Z_" + std::to_string(edo));
  return PitchClassSet(edo, mask);
}

int PitchClassSet::cardinality() const noexcept { return std::popcount(mask_); }

std::vector<int> PitchClassSet::members() const {
  std::vector<int> out;
  for (int x = 0; x < edo_; ++x)
    if ((mask_ >> x) & 1u) out.push_back(x);
  return out;
}

PitchClassSet PitchClassSet::transposed(int n) const {
  const int shift = ((n % edo_) + edo_) % edo_;
  return PitchClassSet(edo_, rotate(mask_, shift, edo_));
}

bool PitchClassSet::is_subset_of(const PitchClassSet& other) const {
  if (edo_ != other.edo_) throw InvalidArgument("comparing pitch-class sets of different edo");
  return (mask_ & ~other.mask_) == 0;
}

std::strong_ordering operator<=>(const PitchClassSet& a, const PitchClassSet& b) {
  if (auto c = a.edo_ <=> b.edo_; c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string to_brace(const PitchClassSet& pcs) {
  std::string s = "{";
  bool first = true;
  for (int x : pcs.members()) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Set classes

SetClass canonical_form(const PitchClassSet& pcs) {
  return SetClass(PitchClassSet::from_mask(pcs.edo(), canonical_mask(pcs.mask(), pcs.edo())));
}

std::uint64_t burnside_count(int edo) {
  require_edo(edo);
  std::uint64_t total = 0;
  for (int d = 1; d <= edo; ++d) {
    if (edo % d) continue;
    int phi = 0;  // Euler's totient of d
    for (int k = 1; k <= d; ++k)
      if (std::gcd(k, d) == 1) ++phi;
    total += static_cast<std::uint64_t>(phi) << (edo / d);
  }
  return total / static_cast<std::uint64_t>(edo);
}

std::vector<SetClass> enumerate_set_classes(int edo) {
  require_edo(edo);
  std::vector<SetClass> out;
  out.push_back(canonical_form(PitchClassSet::from_mask(edo, 0)));
  const std::uint64_t limit = std::uint64_t{1} << edo;
  // Nonempty canonical representatives contain 0, so only odd masks qualify.
  for (std::uint64_t m = 1; m < limit; m += 2) {
    const auto mask = static_cast<Mask>(m);
    if (is_canonical(mask, edo)) out.push_back(canonical_form(PitchClassSet::from_mask(edo, mask)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool class_leq(const SetClass& a, const SetClass& b) {
  if (a.edo() != b.edo())
    throw InvalidArgument("comparing set classes of different edo (" + std::to_string(a.edo()) + " vs " +
                          std::to_string(b.edo()) + ")");
  if (a.cardinality() > b.cardinality()) return false;
  const Mask ma = a.rep().mask();
  const Mask mb = b.rep().mask();
  for (int r = 0; r < a.edo(); ++r)
    if ((rotate(ma, r, a.edo()) & ~mb) == 0) return true;
  return false;
}

SpanProfile span_profile(const SetClass& c) {
  const auto m = c.rep().members();
  if (m.empty()) throw InvalidArgument("the empty set class has no scalar intervals");
  const std::size_t n = m.size();
  SpanProfile sp;
  sp.seconds.resize(n);
  for (std::size_t i = 0; i + 1 < n; ++i) sp.seconds[i] = m[i + 1] - m[i];
  sp.seconds[n - 1] = m[0] + c.edo() - m[n - 1];
  sp.thirds.resize(n);
  for (std::size_t i = 0; i < n; ++i) sp.thirds[i] = sp.seconds[i] + sp.seconds[(i + 1) % n];
  return sp;
}

std::vector<SetClass> sck_members(int edo, int max_second) {
  require_span(edo, max_second);
  std::vector<SetClass> out;
  for (const auto& c : enumerate_set_classes(edo)) {
    if (c.rep().empty()) continue;
    const auto sp = span_profile(c);
    if (*std::max_element(sp.seconds.begin(), sp.seconds.end()) <= max_second) out.push_back(c);
  }
  return out;
}

FiniteRelation class_order(std::span<const SetClass> classes) {
  auto rel = FiniteRelation::from_predicate(
      classes.size(), [&](std::size_t i, std::size_t j) { return class_leq(classes[i], classes[j]); });
  std::vector<std::string> labels;
  for (const auto& c : classes) labels.push_back(to_brace(c));
  rel.set_labels(std::move(labels));
  return rel;
}

std::vector<SetClass> sck_minimal(int edo, int max_second) {
  const auto members = sck_members(edo, max_second);
  const auto rel = class_order(members);
  std::vector<SetClass> out;
  for (ElementId i : minimal_elements(rel)) out.push_back(members[i]);
  return out;
}

std::vector<SetClass> sck_wide_thirds(int edo, int max_second) {
  std::vector<SetClass> out;
  for (const auto& c : sck_members(edo, max_second)) {
    const auto sp = span_profile(c);
    if (*std::min_element(sp.thirds.begin(), sp.thirds.end()) >= max_second + 1) out.push_back(c);
  }
  return out;
}

bool proposition1_check(int edo, int max_second) {
  return sck_minimal(edo, max_second) == sck_wide_thirds(edo, max_second);
}

// ---------------------------------------------------------------------------
// Power-set structures

FiniteRelation powerset_inclusion(int edo) {
  require_edo(edo);
  if (edo > kMaxPowersetEdo)
    throw InvalidArgument("power-set relation limited to edo <= " + std::to_string(kMaxPowersetEdo));
  const std::size_t n = std::size_t{1} << edo;
  return FiniteRelation::from_predicate(n, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

GroupAction transposition_action(int edo) {
  require_edo(edo);
  if (edo > kMaxPowersetEdo)
    throw InvalidArgument("power-set action limited to edo <= " + std::to_string(kMaxPowersetEdo));
  const std::size_t n = std::size_t{1} << edo;
  std::vector<Permutation> perms;
  for (int r = 0; r < edo; ++r) {
    Permutation p(n);
    for (std::size_t m = 0; m < n; ++m) p[m] = rotate(static_cast<Mask>(m), r, edo);
    perms.push_back(std::move(p));
  }
  return GroupAction(n, std::move(perms));
}

}  // namespace qo
