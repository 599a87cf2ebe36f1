#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monoalg/error.hpp"
#include "monoalg/homogeneity.hpp"
#include "monoalg/iso.hpp"
#include "monoalg/orbits.hpp"
#include "monoalg/symbolic.hpp"
#include "support/oracles.hpp"
#include "support/symbolic_gen.hpp"

using namespace monoalg;

namespace {

const Cardinal w = Cardinal::omega();

SymbolicAlgebra S(std::string_view text) { return parse_symbolic(text); }

std::string show(std::string_view text) { return to_string(parse_symbolic(text)); }

Cardinal subst(Cardinal c, std::uint64_t m) { return Cardinal(c.resolve(m)); }

// S with every ω replaced by m, re-normalized (which may merge terms).
SymbolicAlgebra substitute(const SymbolicAlgebra& s, std::uint64_t m) {
  std::vector<Term> terms;
  for (const Term& t : s.terms()) {
    Profile p = std::get<Profile>(t.descriptor);
    for (auto& c : p.prefix) c = subst(c, m);
    terms.push_back(Term{subst(t.multiplicity, m), p});
  }
  return SymbolicAlgebra(terms);
}

// Element count of an instance, level by level.
std::uint64_t expected_size(const SymbolicAlgebra& s, std::uint64_t m) {
  std::uint64_t total = 0;
  for (const Term& t : s.terms()) {
    const auto& p = std::get<Profile>(t.descriptor);
    std::uint64_t layer = p.cycle;
    std::uint64_t size = layer;
    for (Cardinal a : p.prefix) size += (layer *= a.resolve(m));
    total += size * t.multiplicity.resolve(m);
  }
  return total;
}

}  // namespace

TEST_CASE("cardinal arithmetic saturates at omega") {
  CHECK(Cardinal(2) + Cardinal(3) == Cardinal(5));
  CHECK(Cardinal(2) + w == w);
  CHECK(w * Cardinal(0) == Cardinal(0));
  CHECK(w * Cardinal(3) == w);
  CHECK(Cardinal(7) < w);
  CHECK(Cardinal(0) < Cardinal(1));
  CHECK_THROWS_AS(w.value(), InvalidInput);
  CHECK_THROWS_AS(Cardinal(UINT64_MAX) + Cardinal(1), InvalidInput);
}

TEST_CASE("parsing and printing") {
  const SymbolicAlgebra a = S("2*A[3; w, 2] + w*B[w]");
  REQUIRE(a.terms().size() == 2);
  CHECK(a.terms()[0].multiplicity == Cardinal(2));
  CHECK(a.terms()[0].descriptor == Descriptor(Profile{3, {w, Cardinal(2)}, std::nullopt}));
  CHECK(a.terms()[1].descriptor == Descriptor(Bee{w}));

  CHECK(S("Z4").terms().front().descriptor == Descriptor(Profile{4, {}, std::nullopt}));
  CHECK(S("A[1; 1; 1]").terms().front().descriptor == Descriptor(Profile{1, {}, Cardinal(1)}));
  CHECK(show("A[1; 1; 1]") == "A[1; ; 1]");
  CHECK(show("A[1; 1, 2; 2]") == "A[1; 1; 2]");
  CHECK(show("A[3]") == "Z3");
  CHECK(show("Z2 + Z2 + w*Z2") == "w*Z2");
  CHECK(show("  N+ 2 * N ") == "3*N");
  CHECK(show("B[ω] + A[2;3]") == "A[2; 3] + B[w]");
  CHECK(show("F") == "sum_n w*A[n; ; w]");
  CHECK(show("F_2") == "sum_n w*A[n; 1; 2]");
  CHECK(show("F_1") == "sum_n w*Z_n");
  CHECK(show("sum_n 2*A[n; 1, 3; 3] + Z1") == "Z1 + sum_n 2*A[n; 1; 3]");

  for (const char* bad : {"", "Z0", "0*Z1", "A[1; 0]", "A[1; 1; 0]", "B[0]", "Z", "Z1 +", "Z1 Z2", "A[1; 1",
                          "Q3", "F_0", "A[w]", "sum_n Z1", "99999999999999999999*Z1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_symbolic(bad), InvalidInput);
  }
  try {
    parse_symbolic("Z1 + A[2; 3, 0]");
    FAIL("expected a parse error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("offset 13") != std::string::npos);
    CHECK(std::string(e.what()).find("zero cardinal") != std::string::npos);
  }
}

TEST_CASE("print then parse is the identity on normal forms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const SymbolicAlgebra s = gen::any(rng);
    CAPTURE(to_string(s));
    CHECK(parse_symbolic(to_string(s)) == s);
  }
}

TEST_CASE("descriptor isomorphism") {
  CHECK(descriptors_isomorphic(Profile{2, {w, Cardinal(3)}, std::nullopt}, Profile{2, {w, Cardinal(3)}, std::nullopt}));
  CHECK_FALSE(descriptors_isomorphic(Profile{1, {Cardinal(1), Cardinal(1)}, std::nullopt},
                                     Profile{1, {Cardinal(1)}, Cardinal(1)}));
  CHECK_FALSE(descriptors_isomorphic(Profile{2, {Cardinal(3)}, std::nullopt}, Profile{3, {Cardinal(3)}, std::nullopt}));
  CHECK(descriptors_isomorphic(Bee{w}, Bee{w}));
  CHECK_FALSE(descriptors_isomorphic(Bee{w}, Bee{Cardinal(2)}));
  CHECK(descriptors_isomorphic(NSucc{}, NSucc{}));
  CHECK_FALSE(descriptors_isomorphic(NSucc{}, Bee{Cardinal(1)}));
  CHECK(descriptors_isomorphic(Profile{1, {Cardinal(2), Cardinal(1), Cardinal(1)}, Cardinal(1)},
                               Profile{1, {Cardinal(2)}, Cardinal(1)}));
  CHECK_THROWS_AS(normalize(Profile{1, {Cardinal(0)}, std::nullopt}), InvalidInput);

  // Equivalence relation, and unchanged by normalizing first.
  std::mt19937_64 rng(5);
  std::vector<Descriptor> ds;
  for (int i = 0; i < 60; ++i) {
    const SymbolicAlgebra s = gen::any(rng);
    for (const Term& t : s.terms()) {
      Descriptor d = t.descriptor;
      // Denormalize tails so normalization has work to do.
      if (auto* p = std::get_if<Profile>(&d); p != nullptr && p->tail) p->prefix.push_back(*p->tail);
      ds.push_back(d);
    }
  }
  for (const auto& a : ds) {
    CHECK(descriptors_isomorphic(a, a));
    for (const auto& b : ds) {
      const bool ab = descriptors_isomorphic(a, b);
      CHECK(ab == descriptors_isomorphic(b, a));
      CHECK(ab == descriptors_isomorphic(normalize(a), normalize(b)));
      if (!ab) continue;
      for (const auto& c : ds) {
        if (descriptors_isomorphic(b, c)) CHECK(descriptors_isomorphic(a, c));
      }
    }
  }
}

TEST_CASE("local finiteness, ULF and heights") {
  CHECK(is_ulf(S("w*A[1; w]")));
  CHECK(is_locally_finite(S("A[1; 2; 2]")));
  CHECK_FALSE(is_ulf(S("A[1; 2; 2]")));
  CHECK_FALSE(is_locally_finite(S("B[w]")));
  CHECK_FALSE(is_locally_finite(S("N + Z1")));
  CHECK(is_locally_finite(S("F")));
  CHECK_FALSE(is_ulf(S("F_1")));
  CHECK(height(Profile{3, {w, Cardinal(2)}, std::nullopt}) == Cardinal(2));
  CHECK(height(Profile{3, {}, std::nullopt}) == Cardinal(0));
  CHECK(height(Profile{3, {}, Cardinal(1)}) == w);
}

TEST_CASE("symbolic 1-orbit counts") {
  CHECK(o1(S("A[3; w, 2]")) == Cardinal(3));
  CHECK(o1(S("Z7")) == Cardinal(1));
  CHECK(o1(S("w*B[w]")) == Cardinal(1));
  CHECK(o1(S("N")) == w);
  CHECK(o1(S("A[1; ; 2]")) == w);
  CHECK(o1(S("F_3")) == w);
  CHECK(o1(S("Z1 + A[1; 1] + B[2]")) == Cardinal(4));

  // Without ω the instance has one component type per term, so its orbit
  // count must agree.
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const SymbolicAlgebra s = gen::instantiable(rng, false);
    CAPTURE(to_string(s));
    CHECK(o1(s) == Cardinal(one_orbits(instantiate(s, 1)).size()));
  }
}

TEST_CASE("omega-categoricity") {
  CHECK(is_omega_categorical(S("A[2; w, 3]")));
  CHECK_FALSE(is_omega_categorical(S("B[w]")));
  CHECK_FALSE(is_omega_categorical(fraisse_limit(LimitKind::kAll)));
  CHECK_FALSE(is_omega_categorical(S("A[1; ; w]")));
  CHECK(is_omega_categorical(S("w*A[1; w, w] + w*Z5")));
}

TEST_CASE("symbolic homogeneity deciders") {
  CHECK(is_ultrahomogeneous(S("w*B[w] + A[2; 3] + A[5; 3]")));
  CHECK_FALSE(is_ultrahomogeneous(S("N + Z3")));
  CHECK(is_homogeneous(S("N + Z3")));
  CHECK_FALSE(is_ultrahomogeneous(S("A[2; 1] + A[2; 2]")));
  CHECK_FALSE(is_homogeneous(S("A[2; 1] + A[2; 2]")));
  CHECK_FALSE(is_ultrahomogeneous(S("B[1] + B[2]")));
  CHECK(is_homogeneous(S("B[1] + B[2] + N")));
  CHECK(is_ultrahomogeneous(S("F")));
  CHECK(is_ultrahomogeneous(S("F_2 + w*A[3; 1; 2]")));
  CHECK_FALSE(is_ultrahomogeneous(S("F_2 + Z3")));
  CHECK_FALSE(is_ultrahomogeneous(S("F + F_2")));

  CHECK(is_transitive(S("w*B[w]")));
  CHECK(is_transitive(S("3*Z5")));
  CHECK_FALSE(is_transitive(S("A[1; 1]")));
  CHECK_FALSE(is_transitive(S("Z1 + Z2")));
  CHECK_FALSE(is_transitive(S("N")));
  CHECK_FALSE(is_transitive(S("F_1")));

  CHECK(is_partially_homogeneous(S("w*Z1 + w*Z2")));
  CHECK(is_partially_homogeneous(S("w*Z1 + 2*Z3")));
  CHECK(is_partially_homogeneous(S("w*Z1 + Z4")));
  CHECK(is_partially_homogeneous(S("Z4")));
  CHECK_FALSE(is_partially_homogeneous(S("2*Z4")));
  CHECK(is_partially_homogeneous(S("w*A[1; 1]")));
  CHECK(is_partially_homogeneous(S("A[1; w]")));
  CHECK_FALSE(is_partially_homogeneous(S("2*A[1; 2]")));
  CHECK_FALSE(is_partially_homogeneous(S("Z2 + Z3")));
  CHECK_FALSE(is_partially_homogeneous(S("B[1]")));
  CHECK_FALSE(is_partially_homogeneous(S("F_1")));
}

TEST_CASE("symbolic deciders agree with the finite ones on instances") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const bool with_omega = i % 2 == 1;
    const SymbolicAlgebra s = gen::instantiable(rng, with_omega);
    CAPTURE(to_string(s));
    for (std::uint64_t m : {1, 2, 3}) {
      CAPTURE(m);
      const FiniteMonounary a = instantiate(s, m);
      REQUIRE(a.size() == expected_size(s, m));
      // The substituted form describes the instance exactly.
      const SymbolicAlgebra fixed = substitute(s, m);
      CHECK(is_ultrahomogeneous(fixed) == is_ultrahomogeneous(a));
      CHECK(is_transitive(fixed) == is_transitive(a));
      CHECK(is_partially_homogeneous(fixed) == is_partially_homogeneous(a));
      if (a.size() <= kDefaultOracleBound) {
        CHECK(is_ultrahomogeneous(fixed) == is_ultrahomogeneous_oracle(a));
        CHECK(is_partially_homogeneous(fixed) == is_partially_homogeneous_oracle(a));
      }
      // The ω-form itself answers the same way unless the substitution folds
      // two types together (A[4;2] + A[4;w] at m = 2) or turns an ω
      // multiplicity into 1, which can complete a pattern (w*A[1;2] at m = 1).
      if (fixed.terms().size() != s.terms().size()) continue;
      CHECK(is_ultrahomogeneous(s) == is_ultrahomogeneous(a));
      CHECK(is_transitive(s) == is_transitive(a));
      if (m >= 2) CHECK(is_partially_homogeneous(s) == is_partially_homogeneous(a));
    }
  }
}

TEST_CASE("structural properties over random normal forms") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const SymbolicAlgebra s = gen::any(rng);
    CAPTURE(to_string(s));
    if (is_omega_categorical(s)) CHECK(is_ulf(s));
    CHECK((is_ultrahomogeneous(s) && is_omega_categorical(s)) == matches_homogeneous_categorical_shape(s));
    if (is_ultrahomogeneous(s)) CHECK(is_homogeneous(s));
    if (is_transitive(s)) CHECK(is_ultrahomogeneous(s));
  }
}

TEST_CASE("Fraisse limits") {
  const SymbolicAlgebra f = fraisse_limit(LimitKind::kAll);
  REQUIRE(f.families().size() == 1);
  CHECK(f.families()[0].member(4) == Profile{4, {}, w});
  CHECK(f.families()[0].multiplicity == w);
  const SymbolicAlgebra f2 = fraisse_limit(LimitKind::kBounded, 2);
  CHECK(f2.families()[0].member(3) == Profile{3, {Cardinal(1)}, Cardinal(2)});
  CHECK(fraisse_limit(LimitKind::kBounded, 1).families()[0].member(5) == Profile{5, {}, std::nullopt});
  CHECK_THROWS_AS(fraisse_limit(LimitKind::kBounded, 0), InvalidInput);
  CHECK(is_ultrahomogeneous(f2));
  CHECK(is_locally_finite(f2));
  CHECK_FALSE(is_ulf(f2));
}

TEST_CASE("instantiation") {
  CHECK(instantiate(S("A[1; w, 2]"), 3).size() == 10);
  CHECK(instantiate(S("Z4"), 7).table() == std::vector<Element>{1, 2, 3, 0});
  CHECK(instantiate(S("A[1; 2]"), 1).table() == std::vector<Element>{0, 0, 0});
  CHECK(instantiate(S("2*Z1 + Z2"), 1).table() == std::vector<Element>{0, 1, 3, 2});
  CHECK_THROWS_AS(instantiate(S("B[w]"), 2), InvalidInput);
  CHECK_THROWS_AS(instantiate(S("N"), 2), InvalidInput);
  CHECK_THROWS_AS(instantiate(S("A[1; ; 2]"), 2), InvalidInput);
  CHECK_THROWS_AS(instantiate(S("F_2"), 2), InvalidInput);
  CHECK_THROWS_AS(instantiate(S("A[1; w, w, w]"), 1000), BoundExceeded);
  CHECK_THROWS_AS(instantiate(S("w*Z1"), 100, 99), BoundExceeded);
  CHECK(instantiate(S("w*Z1"), 99, 99).size() == 99);
}

TEST_CASE("truncation") {
  CHECK(to_string(truncate(S("A[1; ; 1]"), 2)) == "A[1; 1, 1]");
  CHECK(to_string(materialize(truncate(S("F_2"), 3), 2)) == "w*A[1; 1, 2, 2] + w*A[2; 1, 2, 2]");
  CHECK(to_string(truncate(materialize(S("F_2"), 2), 3)) == "w*A[1; 1, 2, 2] + w*A[2; 1, 2, 2]");
  CHECK(to_string(truncate(S("Z3"), 5)) == "Z3");
  CHECK(to_string(truncate(S("A[2; 3, 1]"), 0)) == "Z2");
  CHECK(to_string(truncate(S("A[1; 1] + A[1; 1, 2]"), 1)) == "2*A[1; 1]");
  CHECK_THROWS_AS(truncate(S("B[2]"), 1), InvalidInput);
  CHECK_THROWS_AS(truncate(S("N + Z1"), 1), InvalidInput);
  CHECK(to_string(materialize(S("F_1"), 3)) == "w*Z1 + w*Z2 + w*Z3");
}

TEST_CASE("decomposition") {
  CHECK(to_string(decompose(FiniteMonounary({0, 0, 0}))) == "A[1; 2]");
  CHECK(to_string(decompose(FiniteMonounary({1, 0, 3, 4, 2}))) == "Z2 + Z3");
  try {
    decompose(FiniteMonounary({0, 0, 0, 1}));
    FAIL("expected NotUltrahomogeneous");
  } catch (const NotUltrahomogeneous& e) {
    CHECK(std::string(e.what()) ==
          "not ultrahomogeneous: non-uniform preimage counts at cycle size 1, height 1");
  }
}

TEST_CASE("decompose inverts instantiate on the corpus") {
  std::size_t uh = 0;
  for (const auto& a : oracle::corpus_up_to(6)) {
    CAPTURE(a.table());
    if (is_ultrahomogeneous_oracle(a)) {
      ++uh;
      const SymbolicAlgebra s = decompose(a);
      CHECK(is_ultrahomogeneous(s));
      const FiniteMonounary b = instantiate(s, 1);
      CHECK(oracle::isomorphic(a, b));
    } else {
      CHECK_THROWS_AS(decompose(a), NotUltrahomogeneous);
    }
  }
  CHECK(uh > 20);
}

TEST_CASE("instantiate then decompose recovers the substituted form") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const SymbolicAlgebra s = gen::instantiable(rng, true);
    for (std::uint64_t m : {1, 2, 3}) {
      const SymbolicAlgebra expected = substitute(s, m);
      CAPTURE(to_string(s));
      CAPTURE(m);
      const FiniteMonounary a = instantiate(s, m);
      if (is_ultrahomogeneous(expected)) {
        CHECK(decompose(a) == expected);
      } else {
        CHECK_THROWS_AS(decompose(a), NotUltrahomogeneous);
      }
    }
  }
  for (int i = 0; i < 100; ++i) {
    const SymbolicAlgebra s = gen::uh_normal_form(rng);
    CHECK(decompose(instantiate(s, 1)) == s);
  }
}
