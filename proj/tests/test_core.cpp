#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "monoalg/core.hpp"
#include "monoalg/error.hpp"
#include "support/oracles.hpp"

using namespace monoalg;

namespace {

std::vector<Element> v(std::initializer_list<Element> xs) { return xs; }

}  // namespace

TEST_CASE("validate accepts well-formed tables and rejects the rest") {
  const std::vector<std::int64_t> ok{0, 0, 0, 1};
  CHECK(FiniteMonounary::validate(ok).size() == 4);
  CHECK_THROWS_AS(FiniteMonounary::validate(std::vector<std::int64_t>{}), InvalidInput);
  CHECK_THROWS_AS(FiniteMonounary::validate(std::vector<std::int64_t>{0, 5}), InvalidInput);
  CHECK_THROWS_AS(FiniteMonounary::validate(std::vector<std::int64_t>{-1}), InvalidInput);
  CHECK_THROWS_AS(PartialMonounary({std::nullopt, 2}), InvalidInput);
}

TEST_CASE("structure report of a small tree") {
  const FiniteMonounary a(v({0, 0, 0, 1}));
  const auto r = structure_report(a);
  CHECK(r.cyclic == v({0}));
  CHECK(r.heights == std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(r.leaves == v({2, 3}));
  CHECK(r.height == 2);
  CHECK(r.components.size() == 1);
  CHECK(r.min_generating_sets.first() == v({2, 3}));
  CHECK(r.min_generating_sets.cyclic_choices.empty());
}

TEST_CASE("structure report of cycles") {
  const auto z3 = structure_report(FiniteMonounary(v({1, 2, 0})));
  CHECK(z3.cyclic == v({0, 1, 2}));
  CHECK(z3.height == 0);
  CHECK(z3.leaves.empty());
  REQUIRE(z3.min_generating_sets.cyclic_choices.size() == 1);
  CHECK(z3.min_generating_sets.cyclic_choices[0] == v({0, 1, 2}));

  const auto z2z3 = structure_report(FiniteMonounary(v({1, 0, 3, 4, 2})));
  CHECK(z2z3.components.size() == 2);
  CHECK(z2z3.cycle_sizes == std::vector<std::size_t>{2, 3});
  CHECK(z2z3.height == 0);
}

TEST_CASE("generated subalgebras") {
  const FiniteMonounary a(v({0, 0, 0, 1}));
  CHECK(generated(a, v({3})) == v({0, 1, 3}));
  CHECK(generated(FiniteMonounary(v({1, 2, 0})), v({1})) == v({0, 1, 2}));
  CHECK(generated(a, v({2, 3})) == v({0, 1, 2, 3}));
  CHECK_THROWS_AS(generated(a, std::vector<Element>{}), InvalidInput);
  CHECK_THROWS_AS(generated(a, v({4})), InvalidInput);
}

TEST_CASE("upper sets") {
  const FiniteMonounary a(v({0, 0, 0, 1}));
  CHECK(upper_set(a, 1).elements == v({1, 3}));
  CHECK(upper_set(a, 0).elements == v({0, 1, 2, 3}));
  CHECK(upper_set(FiniteMonounary(v({1, 2, 0})), 1).elements == v({1}));

  const auto up = upper_set(a, 1);
  // Inside A_1 = {1, 3}, 3 maps to 1 and 1 leaves the set.
  CHECK_FALSE(up.algebra.defined(0));
  CHECK(up.algebra(1) == std::optional<Element>(0));
}

TEST_CASE("relational form") {
  CHECK(relational_form(FiniteMonounary(v({0, 0, 0}))) == std::vector<Edge>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(relational_form(FiniteMonounary(v({1, 0}))) == std::vector<Edge>{{0, 1}, {1, 0}});
  CHECK(relational_form(PartialMonounary({std::nullopt, std::nullopt})).empty());
}

TEST_CASE("invariants hold on every algebra with at most 6 points") {
  for (const auto& a : oracle::corpus_up_to(6)) {
    const auto r = structure_report(a);
    const std::size_t n = a.size();
    std::set<Element> seen;
    for (const auto& comp : r.components) {
      CHECK(std::any_of(comp.begin(), comp.end(), [&](Element x) { return r.is_cyclic(x); }));
      seen.insert(comp.begin(), comp.end());

      // The upper sets of the cyclic elements of a component partition it.
      std::vector<Element> covered;
      for (Element x : comp) {
        if (!r.is_cyclic(x)) continue;
        const auto up = upper_set(a, x).elements;
        covered.insert(covered.end(), up.begin(), up.end());
      }
      std::sort(covered.begin(), covered.end());
      CHECK(covered == comp);
    }
    CHECK(seen.size() == n);

    for (std::size_t x = 0; x < n; ++x) {
      const auto hx = r.heights[x];
      const auto hy = r.heights[static_cast<std::size_t>(a.table()[x])];
      CHECK(hy == (hx == 0 ? 0 : hx - 1));
      CHECK(generated(a, v({static_cast<Element>(x)})) ==
            [&] {
              const auto s = oracle::closure(a, {static_cast<Element>(x)});
              return std::vector<Element>(s.begin(), s.end());
            }());
    }

    // L ∪ K generates everything and no proper subset does.
    const auto gens = r.min_generating_sets.first();
    CHECK(generated(a, gens).size() == n);
    for (std::size_t drop = 0; drop < gens.size(); ++drop) {
      std::vector<Element> fewer = gens;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!fewer.empty()) CHECK(generated(a, fewer).size() < n);
    }
  }
}

TEST_CASE("generated distributes over unions") {
  for (const auto& a : oracle::corpus_up_to(5)) {
    const auto n = static_cast<Element>(a.size());
    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        auto gx = generated(a, v({x}));
        const auto gy = generated(a, v({y}));
        gx.insert(gx.end(), gy.begin(), gy.end());
        std::sort(gx.begin(), gx.end());
        gx.erase(std::unique(gx.begin(), gx.end()), gx.end());
        CHECK(generated(a, v({x, y})) == gx);
      }
    }
  }
}

TEST_CASE("minimal generating sets are exactly the leaves plus one cycle element") {
  // Exhaustive check on every algebra with at most 5 points: a subset is a
  // minimal generating set iff it contains all leaves and one element per
  // purely cyclic component.
  for (const auto& a : oracle::corpus_up_to(5)) {
    const auto r = structure_report(a);
    const std::size_t n = a.size();
    std::size_t expected = 1;
    for (const auto& choice : r.min_generating_sets.cyclic_choices) expected *= choice.size();
    std::size_t found = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Element> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) s.push_back(static_cast<Element>(i));
      }
      if (generated(a, s).size() != n) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < s.size() && minimal; ++i) {
        auto t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        if (!t.empty() && generated(a, t).size() == n) minimal = false;
      }
      if (!minimal) continue;
      ++found;
      for (Element leaf : r.leaves) CHECK(std::find(s.begin(), s.end(), leaf) != s.end());
    }
    CHECK(found == expected);
  }
}
