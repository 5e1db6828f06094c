#pragma once

// Finite relations, permutation group actions and the relations they induce
// on orbit spaces.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qo {

using ElementId = std::size_t;
using ElementPair = std::pair<ElementId, ElementId>;

/// Outcome of comparing two elements of a (partially) ordered set.
enum class Comparison { Less, Greater, Equal, Incomparable };

std::string_view to_string(Comparison c) noexcept;

/// Boolean relation on the ground set {0, ..., size-1}. holds(i, j) reads
/// "i precedes j". No order axioms are assumed; see relation_axioms().
class FiniteRelation {
 public:
  FiniteRelation() = default;
  explicit FiniteRelation(std::size_t size);
  FiniteRelation(std::size_t size, std::span<const ElementPair> pairs);

  static FiniteRelation identity(std::size_t size);

  template <typename Pred>
  static FiniteRelation from_predicate(std::size_t size, Pred&& pred) {
    FiniteRelation r(size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (pred(i, j)) r.table_[i * size + j] = 1;
    return r;
  }

  std::size_t size() const noexcept { return size_; }

  bool holds(ElementId i, ElementId j) const {
    check(i);
    check(j);
    return table_[i * size_ + j] != 0;
  }

  void set(ElementId i, ElementId j, bool value = true);

  /// All (i, j) with holds(i, j), in row-major order.
  std::vector<ElementPair> pairs() const;
  std::size_t pair_count() const;

  /// Reversed relation: holds(j, i) in the result iff holds(i, j) here.
  FiniteRelation converse() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  /// Display label for i: the stored label, or the decimal index.
  std::string label(ElementId i) const;

  friend bool operator==(const FiniteRelation& a, const FiniteRelation& b) {
    return a.size_ == b.size_ && a.table_ == b.table_;
  }

 private:
  void check(ElementId i) const;

  std::size_t size_ = 0;
  std::vector<unsigned char> table_;
  std::vector<std::string> labels_;
};

/// perm[x] is the image of x.
using Permutation = std::vector<ElementId>;

/// (outer ∘ inner)(x) = outer[inner[x]].
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(std::size_t size);

/// A finite permutation group acting on {0, ..., size-1}, stored as the full
/// element list. Construction rejects lists that miss the identity or are not
/// closed under composition and inverse.
class GroupAction {
 public:
  static constexpr std::size_t kDefaultClosureCap = 100000;

  GroupAction(std::size_t size, std::vector<Permutation> perms);

  static GroupAction trivial(std::size_t size);

  /// Closes `generators` under composition. Throws if the group would exceed
  /// `cap` elements.
  static GroupAction generated_by(std::size_t size, std::span<const Permutation> generators,
                                  std::size_t cap = kDefaultClosureCap);

  std::size_t size() const noexcept { return size_; }
  const std::vector<Permutation>& perms() const noexcept { return perms_; }

 private:
  struct Closed {};
  GroupAction(Closed, std::size_t size, std::vector<Permutation> perms)
      : size_(size), perms_(std::move(perms)) {}

  std::size_t size_;
  std::vector<Permutation> perms_;
};

/// Orbit space of a group action, optionally carrying an induced relation
/// whose ground set is the orbit ids.
struct QuotientStructure {
  std::vector<std::size_t> class_index;       // element -> orbit id
  std::vector<std::vector<ElementId>> orbits;  // orbit id -> sorted members
  std::optional<FiniteRelation> relation;
};

enum class InducedMode {
  Strong,  // for all a in A there is b in B with a <= b
  Weak,    // there are a in A, b in B with a <= b
};

struct ActionProperties {
  bool increasing = false;
  bool transverse = false;
};

struct RelationAxioms {
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;

  bool preorder() const noexcept { return reflexive && transitive; }
  bool partial_order() const noexcept { return reflexive && antisymmetric && transitive; }
};

/// Orbit ids are assigned in increasing order of each orbit's least element.
QuotientStructure orbits(const GroupAction& action);

QuotientStructure induced_relation(const FiniteRelation& rel, const GroupAction& action,
                                   InducedMode mode);

ActionProperties action_properties(const FiniteRelation& rel, const GroupAction& action);

RelationAxioms relation_axioms(const FiniteRelation& rel);

/// Elements i of `subset` such that no other j in `subset` has j <= i.
std::vector<ElementId> minimal_elements(const FiniteRelation& rel,
                                        std::span<const ElementId> subset);
std::vector<ElementId> minimal_elements(const FiniteRelation& rel);
std::vector<ElementId> maximal_elements(const FiniteRelation& rel,
                                        std::span<const ElementId> subset);
std::vector<ElementId> maximal_elements(const FiniteRelation& rel);

/// Cover relation of a partial order (Hasse diagram edges). Reflexive pairs
/// are dropped. Throws InvalidArgument if `rel` is not a partial order.
FiniteRelation transitive_reduction(const FiniteRelation& rel);

/// Smallest reflexive and transitive relation containing `rel`.
FiniteRelation reflexive_transitive_closure(const FiniteRelation& rel);

inline constexpr double kSubmajorizationTolerance = 1e-9;

/// Weak submajorization of two equally sized multisets: sort descending,
/// compare prefix sums component-wise. Equal iff the sorted multisets
/// coincide within `tol`.
Comparison submajorize_compare(std::span<const double> a, std::span<const double> b,
                               double tol = kSubmajorizationTolerance);

}  // namespace qo
