#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "monoalg/core.hpp"
#include "monoalg/limits.hpp"

namespace monoalg {

// (A_c; ≤) for a cyclic c, where a ≥ b iff θ^k(a) = b for some k.
struct InducedPoset {
  // A_c, ascending.
  std::vector<Element> elements;
  // Every pair (a, b) with a ≤ b, reflexive pairs included, sorted.
  std::vector<std::pair<Element, Element>> leq;
  // (x, θ(x)) for x ≠ c: x covers θ(x). Sorted.
  std::vector<std::pair<Element, Element>> covers;
  Element bottom = 0;

  bool contains(Element x) const;
  bool less_equal(Element a, Element b) const;
};

// Throws InvalidInput if c is not a cyclic element.
InducedPoset build_order(const FiniteMonounary& algebra, Element c);

// The greatest common lower bound. Throws InvalidInput if x or y is outside A_c.
Element meet(const InducedPoset& poset, Element x, Element y);

// Both automorphism groups of A_c, as permutations of positions in
// InducedPoset::elements, each sorted.
struct AutEquality {
  bool equal = false;
  std::vector<Permutation> algebra_side;
  std::vector<Permutation> order_side;
  // Members of exactly one side; empty when equal.
  std::vector<Permutation> difference;
};

// Computes Aut of the partial algebra A_c and Aut(A_c; ≤) separately by
// filtering permutations. Throws BoundExceeded when |A_c| > bound.
AutEquality check_aut_equality(const FiniteMonounary& algebra, Element c,
                               std::size_t bound = kDefaultOracleBound);

}  // namespace monoalg
