#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "monoalg/core.hpp"
#include "skeleton.hpp"

namespace monoalg::detail {

// Level-wise ranking of every rooted tree A_x. Within one table, two elements
// of equal height have equal rank exactly when their trees are isomorphic
// (respecting labels, if any). Ranks are only comparable inside the table they
// were computed for, so isomorphism questions between two algebras are asked
// of their disjoint union.
struct CanonicalForm {
  Skeleton skel;
  std::vector<std::uint32_t> rank;
  // Acyclic preimages ordered by (rank, element).
  std::vector<std::vector<Element>> kids;
  // Per component id: position of each cyclic element within skel.cycles[id].
  std::vector<std::size_t> cycle_pos;
  // Per component id: ranks along the cycle read from the canonical start.
  std::vector<std::vector<std::uint32_t>> code;
  std::vector<std::size_t> start;
  // Smallest shift leaving the cycle code unchanged.
  std::vector<std::size_t> period;
  // Equal classes mean isomorphic components.
  std::vector<std::size_t> klass;
  // Component ids, least code first.
  std::vector<std::size_t> order;
};

CanonicalForm canonical_form(std::span<const Element> table,
                             std::span<const std::int64_t> labels = {});

// Elements listed in canonical order: components by code, each cycle from its
// canonical start, then breadth-first along `kids`.
std::vector<Element> canonical_sequence(const CanonicalForm& form);

// Offsets r with code[i] == other_code[(i + r) mod L] for every i.
std::vector<std::size_t> matching_shifts(const CanonicalForm& form, std::size_t from,
                                         std::size_t to);

}  // namespace monoalg::detail
