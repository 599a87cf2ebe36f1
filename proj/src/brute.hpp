#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monoalg/core.hpp"

namespace monoalg::detail {

// Several partial unary operations on {0, ..., size-1}; -1 marks "undefined".
// Subsets are bitmasks, so size is limited to 31.
struct UnaryStructure {
  std::size_t size = 0;
  std::vector<std::vector<Element>> ops;
};

UnaryStructure from_total(const FiniteMonounary& algebra);
UnaryStructure from_partial(const PartialMonounary& algebra);

// Every permutation π with x ∈ dom(f) ⇔ π(x) ∈ dom(f) and π(f(x)) = f(π(x)),
// found by filtering all size! permutations.
std::vector<Permutation> automorphisms(const UnaryStructure& s);

std::uint32_t closure(const UnaryStructure& s, std::uint32_t set);

// Distinct nonempty closed subsets, ascending as integers.
std::vector<std::uint32_t> subuniverses(const UnaryStructure& s);

// Every bijection between the induced partial structures on `from` and `to`.
// Each map is listed as images of the members of `from` in ascending order.
std::vector<std::vector<Element>> induced_isomorphisms(const UnaryStructure& s, std::uint32_t from,
                                                       std::uint32_t to);

// True when every isomorphism between the induced structures on some pair of
// sets from `sets` (of equal size) is the restriction of a member of `group`.
bool isomorphisms_extend(const UnaryStructure& s, const std::vector<Permutation>& group,
                         const std::vector<std::uint32_t>& sets);

std::vector<Element> members(std::uint32_t set);

}  // namespace monoalg::detail
