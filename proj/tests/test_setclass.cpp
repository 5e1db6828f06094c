#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qo/error.hpp"
#include "qo/setclass.hpp"

using namespace qo;

namespace {

PitchClassSet pcs(int edo, std::vector<int> m) { return PitchClassSet(edo, m); }
SetClass cls(std::vector<int> m, int edo = 12) { return canonical_form(pcs(edo, std::move(m))); }

std::set<SetClass> as_set(const std::vector<SetClass>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("pitch-class set construction") {
  CHECK(pcs(12, {7, 0, 4}).members() == std::vector<int>{0, 4, 7});
  CHECK_THROWS_AS(pcs(12, {0, 0, 4}), InvalidArgument);
  CHECK_THROWS_AS(pcs(12, {12}), InvalidArgument);
  CHECK_THROWS_AS(pcs(12, {-1}), InvalidArgument);
  CHECK_THROWS_AS(pcs(0, {}), InvalidArgument);
  CHECK_THROWS_AS(pcs(kMaxEdo + 1, {}), InvalidArgument);
  CHECK(to_brace(pcs(12, {0, 4, 7})) == "{0,4,7}");
  CHECK(to_brace(pcs(12, {})) == "{}");
  CHECK(pcs(12, {11}).transposed(1).members() == std::vector<int>{0});
  CHECK(pcs(12, {0}).transposed(-1).members() == std::vector<int>{11});
  CHECK(pcs(12, {0, 4}).is_subset_of(pcs(12, {0, 4, 7})));
  CHECK_THROWS_AS(PitchClassSet::from_mask(3, 8u), InvalidArgument);
}

TEST_CASE("canonical form") {
  CHECK(cls({1, 5, 9}).rep().members() == std::vector<int>{0, 4, 8});
  CHECK(cls({}).rep().empty());
  // {2,6,9} is a major triad; its lexicographically least rotation is {0,3,8}.
  CHECK(cls({2, 6, 9}) == cls({0, 4, 7}));
  CHECK(cls({2, 6, 9}).rep().members() == std::vector<int>{0, 3, 8});
  Sampler rng(5);
  for (int t = 0; t < 200; ++t) {
    const int edo = 1 + static_cast<int>(rng.below(16));
    const auto p = PitchClassSet::from_mask(edo, static_cast<PitchClassSet::Mask>(rng.below(1u << edo)));
    const auto c = canonical_form(p);
    const int shift = static_cast<int>(rng.below(static_cast<std::uint64_t>(edo)));
    CHECK(canonical_form(p.transposed(shift)) == c);
    CHECK(canonical_form(c.rep()) == c);
    CHECK(c.cardinality() == p.cardinality());
    for (int s = 0; s < edo; ++s) CHECK(c.rep() <= p.transposed(s));
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_set_classes(1).size() == 2);
  const auto z3 = enumerate_set_classes(3);
  REQUIRE(z3.size() == 4);
  CHECK(z3[0].rep().empty());
  CHECK(z3[3].rep().members() == std::vector<int>{0, 1, 2});
  CHECK(enumerate_set_classes(12).size() == 352);
  CHECK(burnside_count(12) == 352);
  for (int edo = 1; edo <= 14; ++edo) {
    const auto all = enumerate_set_classes(edo);
    CHECK(all.size() == oracle::brute_force_orbit_count(edo));
    CHECK(burnside_count(edo) == all.size());
    CHECK(std::is_sorted(all.begin(), all.end()));
    const auto brute = oracle::brute_force_classes(edo);
    std::vector<std::vector<int>> got;
    for (const auto& c : all) got.push_back(c.rep().members());
    std::sort(got.begin(), got.end());
    CHECK(got == brute);
  }
  CHECK_THROWS_AS(enumerate_set_classes(0), InvalidArgument);
}

TEST_CASE("class order") {
  CHECK(class_leq(cls({0, 4, 7}), cls({0, 4, 7, 10})));
  CHECK_FALSE(class_leq(cls({0, 3, 7}), cls({0, 4, 7, 10})));
  Sampler rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto a = canonical_form(PitchClassSet::from_mask(12, static_cast<PitchClassSet::Mask>(rng.below(4096))));
    CHECK(class_leq(cls({}), a));
    CHECK(class_leq(a, a));
    CHECK(class_leq(a, cls({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})));
  }
  CHECK_THROWS_AS(class_leq(cls({0}, 12), cls({0}, 7)), InvalidArgument);
}

TEST_CASE("class order agrees with the induced powerset order") {
  for (int edo : {4, 6, 7}) {
    const auto q = induced_relation(powerset_inclusion(edo), transposition_action(edo), InducedMode::Strong);
    const auto all = enumerate_set_classes(edo);
    REQUIRE(q.orbits.size() == all.size());
    for (std::size_t i = 0; i < q.orbits.size(); ++i)
      for (std::size_t j = 0; j < q.orbits.size(); ++j) {
        const auto a = canonical_form(PitchClassSet::from_mask(edo, static_cast<PitchClassSet::Mask>(q.orbits[i][0])));
        const auto b = canonical_form(PitchClassSet::from_mask(edo, static_cast<PitchClassSet::Mask>(q.orbits[j][0])));
        CHECK(q.relation->holds(i, j) == class_leq(a, b));
      }
    const auto props = action_properties(powerset_inclusion(edo), transposition_action(edo));
    CHECK(props.increasing);
    CHECK(props.transverse);
  }
  CHECK_THROWS_AS(powerset_inclusion(kMaxPowersetEdo + 1), InvalidArgument);
}

TEST_CASE("span profiles") {
  const auto diatonic = span_profile(cls({0, 2, 4, 5, 7, 9, 11}));
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  // rotation-invariant content; the rep's starting point may differ
  CHECK(sorted(diatonic.seconds) == sorted({2, 2, 1, 2, 2, 2, 1}));
  CHECK(sorted(diatonic.thirds) == sorted({4, 3, 3, 4, 4, 3, 3}));
  const auto diat_rep = span_profile(canonical_form(pcs(12, {0, 2, 4, 5, 7, 9, 11})));
  CHECK(diat_rep.seconds.size() == 7);
  const auto aug = span_profile(cls({0, 4, 8}));
  CHECK(aug.seconds == std::vector<int>{4, 4, 4});
  CHECK(aug.thirds == std::vector<int>{8, 8, 8});
  CHECK(span_profile(cls({0})).seconds == std::vector<int>{12});
  CHECK_THROWS_AS(span_profile(cls({})), InvalidArgument);
  Sampler rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto c = canonical_form(PitchClassSet::from_mask(12, static_cast<PitchClassSet::Mask>(1 + rng.below(4095))));
    const auto s = span_profile(c);
    int total = 0;
    for (int x : s.seconds) total += x;
    CHECK(total == 12);
    for (std::size_t i = 0; i < s.seconds.size(); ++i)
      CHECK(s.thirds[i] == s.seconds[i] + s.seconds[(i + 1) % s.seconds.size()]);
  }
}

TEST_CASE("SC_k members") {
  const auto k1 = sck_members(12, 1);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].cardinality() == 12);
  const auto k2 = as_set(sck_members(12, 2));
  CHECK(k2.count(cls({0, 2, 4, 5, 7, 9, 11})) == 1);
  CHECK(k2.count(cls({0, 1, 2})) == 0);
  CHECK_THROWS_AS(sck_members(12, 0), InvalidArgument);
}

TEST_CASE("SC_k minimal elements") {
  CHECK(as_set(sck_minimal(12, 2)) == std::set<SetClass>{cls({0, 1, 3, 4, 6, 7, 9, 10}), cls({0, 2, 3, 5, 7, 9, 11}),
                                                          cls({0, 2, 4, 5, 7, 9, 11}), cls({0, 2, 4, 6, 8, 10})});
  const auto k4 = as_set(sck_minimal(12, 4));
  CHECK(k4.size() == 7);
  CHECK(k4.count(cls({0, 4, 7, 10})) == 1);
  CHECK(k4.count(cls({0, 4, 8})) == 1);
  const auto k5 = as_set(sck_minimal(12, 5));
  CHECK(k5.size() == 7);
  CHECK(k5.count(cls({0, 3, 7})) == 1);
  CHECK(k5.count(cls({0, 4, 7})) == 1);
  CHECK(k5.count(cls({0, 5, 10})) == 1);
}

TEST_CASE("minimal elements have wide thirds") {
  CHECK(proposition1_check(12, 2));
  for (int k : {3, 4, 5}) CHECK(proposition1_check(12, k));
  CHECK(proposition1_check(7, 2));
  for (int edo = 1; edo <= 10; ++edo)
    for (int k = 1; k <= edo; ++k) CHECK(sck_minimal(edo, k) == sck_wide_thirds(edo, k));
}

TEST_CASE("class_order labels") {
  const std::vector<SetClass> v{cls({0, 4, 7}), cls({0, 4, 7, 10})};
  const auto r = class_order(v);
  CHECK(r.holds(0, 1));
  CHECK_FALSE(r.holds(1, 0));
  CHECK(r.label(1) == to_brace(v[1]));
}
