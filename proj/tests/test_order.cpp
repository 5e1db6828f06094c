#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "qo/error.hpp"
#include "qo/order.hpp"
#include "qo/order_json.hpp"

using namespace qo;

namespace {

FiniteRelation chain3() {
  const std::vector<ElementPair> p{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}};
  return FiniteRelation(3, p);
}

FiniteRelation reflexive_plus(std::size_t n, std::vector<ElementPair> extra) {
  auto r = FiniteRelation::identity(n);
  for (auto [i, j] : extra) r.set(i, j);
  return r;
}

const Permutation kSwap{1, 0};

}  // namespace

TEST_CASE("relation basics") {
  auto r = FiniteRelation(3);
  CHECK(r.pair_count() == 0);
  r.set(0, 2);
  CHECK(r.holds(0, 2));
  CHECK_FALSE(r.holds(2, 0));
  CHECK(r.converse().holds(2, 0));
  CHECK(r.pairs() == std::vector<ElementPair>{{0, 2}});
  CHECK_THROWS_AS(r.holds(3, 0), InvalidArgument);
  CHECK_THROWS_AS(r.set(0, 5), InvalidArgument);
  const std::vector<ElementPair> bad{{0, 7}};
  CHECK_THROWS_AS(FiniteRelation(3, bad), InvalidArgument);
  CHECK(r.label(1) == "1");
  r.set_labels({"a", "b", "c"});
  CHECK(r.label(1) == "b");
  CHECK_THROWS_AS(r.set_labels({"a"}), InvalidArgument);
}

TEST_CASE("permutation helpers") {
  const Permutation p{1, 2, 0};
  CHECK(compose(p, inverse(p)) == identity_permutation(3));
  CHECK(compose(p, p) == Permutation{2, 0, 1});
}

TEST_CASE("group action validation") {
  CHECK_NOTHROW(GroupAction(2, {{0, 1}, kSwap}));
  CHECK_THROWS_AS(GroupAction(2, {kSwap}), InvalidArgument);               // no identity
  CHECK_THROWS_AS(GroupAction(3, {{0, 1, 2}, {1, 2, 0}}), InvalidArgument);  // not closed
  CHECK_THROWS_AS(GroupAction(2, {{0, 0}}), InvalidArgument);              // not a permutation
  CHECK_THROWS_AS(GroupAction(2, {{0, 1, 2}}), InvalidArgument);           // wrong length
  const std::vector<Permutation> gens{{1, 2, 3, 0}};
  CHECK(GroupAction::generated_by(4, gens).perms().size() == 4);
  const std::vector<Permutation> s4{{1, 0, 2, 3}, {1, 2, 3, 0}};
  CHECK(GroupAction::generated_by(4, s4).perms().size() == 24);
  CHECK_THROWS_AS(GroupAction::generated_by(4, s4, 10), InvalidArgument);
}

TEST_CASE("orbits") {
  SUBCASE("swap identifies both") {
    const auto q = orbits(GroupAction(2, {{0, 1}, kSwap}));
    CHECK(q.orbits == std::vector<std::vector<ElementId>>{{0, 1}});
    CHECK_FALSE(q.relation.has_value());
  }
  SUBCASE("trivial group gives singletons") {
    const auto q = orbits(GroupAction::trivial(3));
    CHECK(q.orbits == std::vector<std::vector<ElementId>>{{0}, {1}, {2}});
  }
  SUBCASE("subsets of Z_2 under rotation") {
    // element id = bitmask: 0 = {}, 1 = {0}, 2 = {1}, 3 = {0,1}
    const auto q = orbits(GroupAction(4, {{0, 1, 2, 3}, {0, 2, 1, 3}}));
    CHECK(q.orbits == std::vector<std::vector<ElementId>>{{0}, {1, 2}, {3}});
    CHECK(q.class_index == std::vector<std::size_t>{0, 1, 1, 2});
  }
}

TEST_CASE("induced relations") {
  SUBCASE("subsets of Z_2: chain in both modes") {
    FiniteRelation incl = FiniteRelation::from_predicate(4, [](auto a, auto b) { return (a & ~b) == 0; });
    const GroupAction rot(4, {{0, 1, 2, 3}, {0, 2, 1, 3}});
    for (auto mode : {InducedMode::Strong, InducedMode::Weak}) {
      const auto q = induced_relation(incl, rot, mode);
      CHECK(*q.relation == chain3());
    }
  }
  SUBCASE("weak without strong when the action is not increasing") {
    const auto rel = reflexive_plus(4, {{0, 1}});
    const GroupAction g(4, {{0, 1, 2, 3}, {2, 3, 0, 1}});
    const auto weak = induced_relation(rel, g, InducedMode::Weak);
    const auto strong = induced_relation(rel, g, InducedMode::Strong);
    const auto a = weak.class_index[0], b = weak.class_index[1];
    CHECK(weak.relation->holds(a, b));
    CHECK_FALSE(strong.relation->holds(a, b));
    CHECK_FALSE(action_properties(rel, g).increasing);
  }
  SUBCASE("trivial action reproduces the relation") {
    Sampler rng(7);
    for (int t = 0; t < 20; ++t) {
      const auto rel = oracle::random_poset(1 + rng.below(6), rng);
      const auto g = GroupAction::trivial(rel.size());
      CHECK(*induced_relation(rel, g, InducedMode::Strong).relation == rel);
      CHECK(*induced_relation(rel, g, InducedMode::Weak).relation == rel);
    }
  }
  SUBCASE("labels carry over") {
    auto rel = FiniteRelation::identity(2);
    rel.set_labels({"x", "y"});
    const auto q = induced_relation(rel, GroupAction(2, {{0, 1}, kSwap}), InducedMode::Weak);
    CHECK(q.relation->label(0) == "[x]");
  }
  CHECK_THROWS_AS(induced_relation(FiniteRelation(3), GroupAction::trivial(2), InducedMode::Weak),
                  InvalidArgument);
}

TEST_CASE("action properties") {
  CHECK_FALSE(action_properties(reflexive_plus(2, {{0, 1}}), GroupAction(2, {{0, 1}, kSwap})).increasing);
  CHECK_FALSE(action_properties(reflexive_plus(2, {{0, 1}}), GroupAction(2, {{0, 1}, kSwap})).transverse);
  const auto incl = FiniteRelation::from_predicate(16, [](auto a, auto b) { return (a & ~b) == 0; });
  std::vector<Permutation> rot(4, Permutation(16));
  for (int s = 0; s < 4; ++s)
    for (unsigned m = 0; m < 16; ++m) rot[s][m] = ((m << s) | (m >> (4 - s))) & 15u;
  const auto props = action_properties(incl, GroupAction(16, rot));
  CHECK(props.increasing);
  CHECK(props.transverse);
  const auto trivial = action_properties(chain3(), GroupAction::trivial(3));
  CHECK(trivial.increasing);
  CHECK(trivial.transverse);
  CHECK_THROWS_AS(action_properties(chain3(), GroupAction::trivial(2)), InvalidArgument);
}

TEST_CASE("relation axioms") {
  const auto eq = relation_axioms(FiniteRelation::identity(3));
  CHECK(eq.reflexive);
  CHECK(eq.antisymmetric);
  CHECK(eq.transitive);
  CHECK_FALSE(relation_axioms(reflexive_plus(2, {{0, 1}, {1, 0}})).antisymmetric);
  CHECK_FALSE(relation_axioms(reflexive_plus(3, {{0, 1}, {1, 2}})).transitive);
  CHECK_FALSE(relation_axioms(FiniteRelation(2)).reflexive);
}

TEST_CASE("minimal and maximal elements") {
  CHECK(minimal_elements(chain3()) == std::vector<ElementId>{0});
  CHECK(maximal_elements(chain3()) == std::vector<ElementId>{2});
  const auto anti = FiniteRelation::identity(3);
  CHECK(minimal_elements(anti) == std::vector<ElementId>{0, 1, 2});
  CHECK(maximal_elements(anti) == std::vector<ElementId>{0, 1, 2});
  const std::vector<ElementId> sub{1, 2};
  CHECK(minimal_elements(chain3(), sub) == std::vector<ElementId>{1});
}

TEST_CASE("transitive reduction") {
  CHECK(transitive_reduction(chain3()).pairs() == std::vector<ElementPair>{{0, 1}, {1, 2}});
  CHECK(transitive_reduction(FiniteRelation::identity(3)).pair_count() == 0);
  const auto diamond = reflexive_plus(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}});
  CHECK(transitive_reduction(diamond).pairs() == std::vector<ElementPair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(transitive_reduction(reflexive_plus(3, {{0, 1}, {1, 2}})), InvalidArgument);
}

TEST_CASE("closure then reduction round-trips on random posets") {
  Sampler rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto p = oracle::random_poset(1 + rng.below(8), rng);
    const auto cover = transitive_reduction(p);
    CHECK(reflexive_transitive_closure(cover) == p);
    // no cover edge is implied by two others
    for (auto [a, b] : cover.pairs())
      for (std::size_t c = 0; c < p.size(); ++c)
        if (c != a && c != b) CHECK_FALSE((p.holds(a, c) && p.holds(c, b)));
  }
}

TEST_CASE("submajorization") {
  const std::vector<double> a1{0, 0}, b1{1, 0};
  CHECK(submajorize_compare(a1, b1) == Comparison::Less);
  const std::vector<double> a2{2, 0}, b2{1, 1};
  CHECK(submajorize_compare(a2, b2) == Comparison::Greater);
  const std::vector<double> a3{3, 0}, b3{2, 2};
  CHECK(submajorize_compare(a3, b3) == Comparison::Incomparable);
  const std::vector<double> a4{1, 2, 3}, b4{3, 1, 2};
  CHECK(submajorize_compare(a4, b4) == Comparison::Equal);
  const std::vector<double> shorter{1};
  CHECK_THROWS_AS(submajorize_compare(a1, shorter), InvalidArgument);
}

TEST_CASE("submajorization is a partial order on sorted multisets") {
  Sampler rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(5);
    std::vector<double> a(n), b(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<double>(rng.below(4));
      b[i] = static_cast<double>(rng.below(4));
      c[i] = static_cast<double>(rng.below(4));
    }
    const auto ab = submajorize_compare(a, b);
    const auto ba = submajorize_compare(b, a);
    CHECK((ab == Comparison::Less) == (ba == Comparison::Greater));
    CHECK((ab == Comparison::Equal) == (ba == Comparison::Equal));
    auto leq = [](Comparison c) { return c == Comparison::Less || c == Comparison::Equal; };
    if (leq(ab) && leq(submajorize_compare(b, c))) CHECK(leq(submajorize_compare(a, c)));
  }
}

TEST_CASE("relation and action JSON") {
  const auto rel = chain3();
  const auto back = relation_from_json(relation_to_json(rel));
  CHECK(back == rel);
  const GroupAction g(2, {{0, 1}, kSwap});
  CHECK(action_from_json(action_to_json(g)).perms() == g.perms());
  CHECK_THROWS_AS(relation_from_json(nlohmann::json::parse(R"({"size": 2, "pairs": [[0, 2]]})")), InvalidArgument);
  CHECK_THROWS_AS(relation_from_json(nlohmann::json::parse(R"({"pairs": []})")), InvalidArgument);
  CHECK_THROWS_AS(action_from_json(nlohmann::json::parse(R"({"size": 2, "perms": [[1, 0]]})")), InvalidArgument);
  CHECK_THROWS_AS(action_from_json(nlohmann::json::parse(R"([1, 2])")), InvalidArgument);
}

TEST_CASE("induced relations on random instances") {
  Sampler rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(8);
    const auto g = oracle::random_group(n, rng);
    const auto invariant = rng.below(2) == 0 ? oracle::random_invariant_poset(g, rng) : std::nullopt;
    const auto rel = invariant ? *invariant : oracle::random_poset(n, rng);
    const auto props = action_properties(rel, g);
    const auto strong = induced_relation(rel, g, InducedMode::Strong);
    const auto weak = induced_relation(rel, g, InducedMode::Weak);
    CHECK(relation_axioms(*strong.relation).preorder());
    if (invariant) CHECK(props.increasing);
    if (props.increasing) CHECK(*strong.relation == *weak.relation);
    if (props.transverse) CHECK(relation_axioms(*strong.relation).antisymmetric);
    // strong implies weak
    for (auto [a, b] : strong.relation->pairs()) CHECK(weak.relation->holds(a, b));
  }
}
