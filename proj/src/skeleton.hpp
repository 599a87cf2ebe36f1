#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "monoalg/core.hpp"

namespace monoalg::detail {

// Cycle/tree decomposition of a total function table.
struct Skeleton {
  std::vector<char> cyclic;
  std::vector<std::size_t> height;
  // Acyclic preimages, ascending. Cyclic predecessors are excluded.
  std::vector<std::vector<Element>> children;
  std::vector<std::size_t> component;
  // One cycle per component, starting at its least cyclic element, in θ order.
  std::vector<std::vector<Element>> cycles;
  // Every element, heights nondecreasing.
  std::vector<Element> by_height;
};

Skeleton skeleton(std::span<const Element> table);

}  // namespace monoalg::detail
