#include "qo/order.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "qo/error.hpp"

namespace qo {

std::string_view to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::Less:
      return "Less";
    case Comparison::Greater:
      return "Greater";
    case Comparison::Equal:
      return "Equal";
    case Comparison::Incomparable:
      return "Incomparable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// FiniteRelation

FiniteRelation::FiniteRelation(std::size_t size) : size_(size), table_(size * size, 0) {}

FiniteRelation::FiniteRelation(std::size_t size, std::span<const ElementPair> pairs)
    : FiniteRelation(size) {
  for (auto [i, j] : pairs) set(i, j);
}

FiniteRelation FiniteRelation::identity(std::size_t size) {
  FiniteRelation r(size);
  for (std::size_t i = 0; i < size; ++i) r.table_[i * size + i] = 1;
  return r;
}

void FiniteRelation::check(ElementId i) const {
  if (i >= size_)
    throw InvalidArgument("element id " + std::to_string(i) + " out of range for relation of size " +
                          std::to_string(size_));
}

void FiniteRelation::set(ElementId i, ElementId j, bool value) {
  check(i);
  check(j);
  table_[i * size_ + j] = value ? 1 : 0;
}

std::vector<ElementPair> FiniteRelation::pairs() const {
  std::vector<ElementPair> out;
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j)
      if (table_[i * size_ + j]) out.emplace_back(i, j);
  return out;
}

std::size_t FiniteRelation::pair_count() const {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), 1));
}

FiniteRelation FiniteRelation::converse() const {
  FiniteRelation r(size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) r.table_[j * size_ + i] = table_[i * size_ + j];
  r.labels_ = labels_;
  return r;
}

void FiniteRelation::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size_)
    throw InvalidArgument("expected " + std::to_string(size_) + " labels, got " +
                          std::to_string(labels.size()));
  labels_ = std::move(labels);
}

std::string FiniteRelation::label(ElementId i) const {
  check(i);
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

// ---------------------------------------------------------------------------
// Permutations and group actions

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw InvalidArgument("composing permutations of different sizes");
  Permutation out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = x;
  return out;
}

Permutation identity_permutation(std::size_t size) {
  Permutation p(size);
  std::iota(p.begin(), p.end(), ElementId{0});
  return p;
}

namespace {

void require_permutation(const Permutation& p, std::size_t size) {
  if (p.size() != size)
    throw InvalidArgument("permutation has length " + std::to_string(p.size()) + ", expected " +
                          std::to_string(size));
  std::vector<unsigned char> seen(size, 0);
  for (ElementId x : p) {
    if (x >= size || seen[x]) throw InvalidArgument("not a permutation of 0.." + std::to_string(size - 1));
    seen[x] = 1;
  }
}

}  // namespace

GroupAction::GroupAction(std::size_t size, std::vector<Permutation> perms) : size_(size) {
  std::set<Permutation> members;
  for (auto& p : perms) {
    require_permutation(p, size);
    if (members.insert(p).second) perms_.push_back(std::move(p));
  }
  if (!members.contains(identity_permutation(size)))
    throw InvalidArgument("group action is missing the identity permutation");
  for (const auto& p : perms_) {
    if (!members.contains(inverse(p))) throw InvalidArgument("group action is not closed under inverse");
    for (const auto& q : perms_)
      if (!members.contains(compose(p, q)))
        throw InvalidArgument("group action is not closed under composition");
  }
}

GroupAction GroupAction::trivial(std::size_t size) {
  return GroupAction(size, {identity_permutation(size)});
}

GroupAction GroupAction::generated_by(std::size_t size, std::span<const Permutation> generators,
                                      std::size_t cap) {
  for (const auto& g : generators) require_permutation(g, size);
  std::set<Permutation> seen;
  std::vector<Permutation> elements;
  std::deque<Permutation> frontier;
  auto visit = [&](Permutation p) {
    if (seen.insert(p).second) {
      if (seen.size() > cap)
        throw InvalidArgument("generated group exceeds " + std::to_string(cap) + " elements");
      elements.push_back(p);
      frontier.push_back(std::move(p));
    }
  };
  visit(identity_permutation(size));
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) visit(compose(g, p));
  }
  // Closed by construction: every product of generators was visited.
  return GroupAction(Closed{}, size, std::move(elements));
}

// ---------------------------------------------------------------------------
// Quotients

QuotientStructure orbits(const GroupAction& action) {
  const std::size_t n = action.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  QuotientStructure q;
  q.class_index.assign(n, unset);
  for (ElementId a = 0; a < n; ++a) {
    if (q.class_index[a] != unset) continue;
    const std::size_t id = q.orbits.size();
    std::vector<ElementId> orbit;
    for (const auto& t : action.perms()) {
      const ElementId image = t[a];
      if (q.class_index[image] == unset) {
        q.class_index[image] = id;
        orbit.push_back(image);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    q.orbits.push_back(std::move(orbit));
  }
  return q;
}

QuotientStructure induced_relation(const FiniteRelation& rel, const GroupAction& action,
                                   InducedMode mode) {
  if (rel.size() != action.size())
    throw InvalidArgument("relation size " + std::to_string(rel.size()) +
                          " does not match action size " + std::to_string(action.size()));
  QuotientStructure q = orbits(action);
  const std::size_t k = q.orbits.size();

  auto some_b = [&](ElementId a, const std::vector<ElementId>& orbit_b) {
    return std::any_of(orbit_b.begin(), orbit_b.end(), [&](ElementId b) { return rel.holds(a, b); });
  };

  FiniteRelation induced(k);
  for (std::size_t A = 0; A < k; ++A) {
    for (std::size_t B = 0; B < k; ++B) {
      const auto& oa = q.orbits[A];
      const auto& ob = q.orbits[B];
      const bool holds = mode == InducedMode::Strong
                             ? std::all_of(oa.begin(), oa.end(), [&](ElementId a) { return some_b(a, ob); })
                             : std::any_of(oa.begin(), oa.end(), [&](ElementId a) { return some_b(a, ob); });
      if (holds) induced.set(A, B);
    }
  }
  if (!rel.labels().empty()) {
    std::vector<std::string> labels;
    for (const auto& orbit : q.orbits) labels.push_back("[" + rel.label(orbit.front()) + "]");
    induced.set_labels(std::move(labels));
  }
  q.relation = std::move(induced);
  return q;
}

ActionProperties action_properties(const FiniteRelation& rel, const GroupAction& action) {
  if (rel.size() != action.size())
    throw InvalidArgument("relation size " + std::to_string(rel.size()) +
                          " does not match action size " + std::to_string(action.size()));
  const std::size_t n = rel.size();
  ActionProperties props{true, true};
  for (const auto& t : action.perms()) {
    for (ElementId a = 0; a < n; ++a) {
      if (props.transverse && rel.holds(t[a], a) && t[a] != a) props.transverse = false;
      if (!props.increasing) continue;
      for (ElementId b = 0; b < n; ++b) {
        if (rel.holds(a, b) && !rel.holds(t[a], t[b])) {
          props.increasing = false;
          break;
        }
      }
    }
    if (!props.increasing && !props.transverse) break;
  }
  return props;
}

RelationAxioms relation_axioms(const FiniteRelation& rel) {
  const std::size_t n = rel.size();
  RelationAxioms ax{true, true, true};
  for (ElementId i = 0; i < n; ++i) {
    if (!rel.holds(i, i)) ax.reflexive = false;
    for (ElementId j = 0; j < n; ++j) {
      if (!rel.holds(i, j)) continue;
      if (i != j && rel.holds(j, i)) ax.antisymmetric = false;
      if (ax.transitive) {
        for (ElementId k = 0; k < n; ++k) {
          if (rel.holds(j, k) && !rel.holds(i, k)) {
            ax.transitive = false;
            break;
          }
        }
      }
    }
  }
  return ax;
}

std::vector<ElementId> minimal_elements(const FiniteRelation& rel,
                                        std::span<const ElementId> subset) {
  for (ElementId i : subset) rel.holds(i, i);  // range check
  std::vector<ElementId> out;
  for (ElementId i : subset) {
    const bool dominated =
        std::any_of(subset.begin(), subset.end(), [&](ElementId j) { return j != i && rel.holds(j, i); });
    if (!dominated) out.push_back(i);
  }
  return out;
}

std::vector<ElementId> minimal_elements(const FiniteRelation& rel) {
  const Permutation all = identity_permutation(rel.size());
  return minimal_elements(rel, all);
}

std::vector<ElementId> maximal_elements(const FiniteRelation& rel,
                                        std::span<const ElementId> subset) {
  return minimal_elements(rel.converse(), subset);
}

std::vector<ElementId> maximal_elements(const FiniteRelation& rel) {
  return minimal_elements(rel.converse());
}

FiniteRelation transitive_reduction(const FiniteRelation& rel) {
  if (!relation_axioms(rel).partial_order())
    throw InvalidArgument("transitive reduction requires a partial order");
  const std::size_t n = rel.size();
  FiniteRelation cover(n);
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) {
      if (i == j || !rel.holds(i, j)) continue;
      bool between = false;
      for (ElementId k = 0; k < n && !between; ++k)
        between = k != i && k != j && rel.holds(i, k) && rel.holds(k, j);
      if (!between) cover.set(i, j);
    }
  }
  cover.set_labels(rel.labels());
  return cover;
}

FiniteRelation reflexive_transitive_closure(const FiniteRelation& rel) {
  const std::size_t n = rel.size();
  FiniteRelation c = rel;
  for (ElementId i = 0; i < n; ++i) c.set(i, i);
  // Warshall
  for (ElementId k = 0; k < n; ++k)
    for (ElementId i = 0; i < n; ++i)
      if (c.holds(i, k))
        for (ElementId j = 0; j < n; ++j)
          if (c.holds(k, j)) c.set(i, j);
  return c;
}

// ---------------------------------------------------------------------------
// Submajorization

namespace {

std::vector<double> sorted_descending(std::span<const double> v) {
  std::vector<double> s(v.begin(), v.end());
  std::sort(s.begin(), s.end(), std::greater<>{});
  return s;
}

}  // namespace

Comparison submajorize_compare(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size())
    throw InvalidArgument("submajorization needs multisets of equal size (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  if (a.empty()) throw InvalidArgument("submajorization needs nonempty multisets");

  const auto sa = sorted_descending(a);
  const auto sb = sorted_descending(b);
  bool equal = true;
  for (std::size_t i = 0; i < sa.size(); ++i) equal = equal && std::abs(sa[i] - sb[i]) <= tol;
  if (equal) return Comparison::Equal;

  bool leq = true;
  bool geq = true;
  double fa = 0.0;
  double fb = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    fa += sa[i];
    fb += sb[i];
    leq = leq && fa <= fb + tol;
    geq = geq && fb <= fa + tol;
  }
  if (leq) return Comparison::Less;
  if (geq) return Comparison::Greater;
  return Comparison::Incomparable;
}

}  // namespace qo
