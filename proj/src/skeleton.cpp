#include "skeleton.hpp"

namespace monoalg::detail {

Skeleton skeleton(std::span<const Element> table) {
  const std::size_t n = table.size();
  Skeleton s;
  s.cyclic.assign(n, 1);
  s.height.assign(n, 0);
  s.children.assign(n, {});
  s.component.assign(n, 0);

  // Peel elements of in-degree zero; whatever survives lies on a cycle.
  std::vector<std::size_t> indegree(n, 0);
  for (Element y : table) ++indegree[static_cast<std::size_t>(y)];
  std::vector<Element> queue;
  queue.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (indegree[x] == 0) queue.push_back(static_cast<Element>(x));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = static_cast<std::size_t>(queue[head]);
    s.cyclic[x] = 0;
    const auto y = static_cast<std::size_t>(table[x]);
    if (--indegree[y] == 0) queue.push_back(static_cast<Element>(y));
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!s.cyclic[x]) s.children[static_cast<std::size_t>(table[x])].push_back(static_cast<Element>(x));
  }

  std::vector<char> seen(n, 0);
  s.by_height.reserve(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (!s.cyclic[start] || seen[start]) continue;
    const std::size_t id = s.cycles.size();
    std::vector<Element> cycle;
    auto x = static_cast<Element>(start);
    do {
      cycle.push_back(x);
      seen[static_cast<std::size_t>(x)] = 1;
      s.component[static_cast<std::size_t>(x)] = id;
      x = table[static_cast<std::size_t>(x)];
    } while (x != static_cast<Element>(start));
    s.cycles.push_back(std::move(cycle));
  }

  // Breadth-first from the cycles along acyclic preimages.
  for (std::size_t x = 0; x < n; ++x) {
    if (s.cyclic[x]) s.by_height.push_back(static_cast<Element>(x));
  }
  for (std::size_t head = 0; head < s.by_height.size(); ++head) {
    const auto x = static_cast<std::size_t>(s.by_height[head]);
    for (Element c : s.children[x]) {
      const auto cu = static_cast<std::size_t>(c);
      s.height[cu] = s.height[x] + 1;
      s.component[cu] = s.component[x];
      s.by_height.push_back(c);
    }
  }
  return s;
}

}  // namespace monoalg::detail
