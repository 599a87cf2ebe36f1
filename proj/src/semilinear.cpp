#include "monoalg/semilinear.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <string>

#include "brute.hpp"
#include "monoalg/error.hpp"

namespace monoalg {

namespace {

std::size_t position(const InducedPoset& poset, Element x) {
  auto it = std::lower_bound(poset.elements.begin(), poset.elements.end(), x);
  if (it == poset.elements.end() || *it != x) {
    throw InvalidInput("element " + std::to_string(x) + " is not in A_" + std::to_string(poset.bottom));
  }
  return static_cast<std::size_t>(it - poset.elements.begin());
}

// Elements below x, from x down to the bottom.
std::vector<Element> chain(const InducedPoset& poset, Element x) {
  std::map<Element, Element> down(poset.covers.begin(), poset.covers.end());
  std::vector<Element> out{x};
  for (auto it = down.find(x); it != down.end(); it = down.find(it->second)) out.push_back(it->second);
  return out;
}

}  // namespace

bool InducedPoset::contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }

bool InducedPoset::less_equal(Element a, Element b) const {
  return std::binary_search(leq.begin(), leq.end(), std::make_pair(a, b));
}

InducedPoset build_order(const FiniteMonounary& algebra, Element c) {
  if (!algebra.contains(c)) throw InvalidInput("element " + std::to_string(c) + " out of range");
  Element y = c;
  for (std::size_t i = 0; i < algebra.size(); ++i) y = algebra(y);
  // After n steps y is on a cycle; c is cyclic iff it lies on that cycle.
  bool cyclic = false;
  for (std::size_t i = 0; i < algebra.size() && !cyclic; ++i, y = algebra(y)) cyclic = y == c;
  if (!cyclic) throw InvalidInput("element " + std::to_string(c) + " is not cyclic");

  InducedPoset p;
  p.bottom = c;
  p.elements = upper_set(algebra, c).elements;
  for (Element x : p.elements) {
    p.leq.emplace_back(x, x);
    if (x == c) continue;
    p.covers.emplace_back(x, algebra(x));
    for (Element z = algebra(x);; z = algebra(z)) {
      p.leq.emplace_back(z, x);
      if (z == c) break;
    }
  }
  std::sort(p.leq.begin(), p.leq.end());
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

Element meet(const InducedPoset& poset, Element x, Element y) {
  position(poset, x);
  position(poset, y);
  const std::vector<Element> below_x = chain(poset, x);
  for (Element z : chain(poset, y)) {
    if (std::find(below_x.begin(), below_x.end(), z) != below_x.end()) return z;
  }
  return poset.bottom;
}

AutEquality check_aut_equality(const FiniteMonounary& algebra, Element c, std::size_t bound) {
  const InducedPoset poset = build_order(algebra, c);
  const std::size_t n = poset.elements.size();
  if (n > bound) {
    throw BoundExceeded("|A_c| = " + std::to_string(n) + " exceeds the oracle bound " + std::to_string(bound) +
                        " (raise it with --bound or MONOALG_BOUND)");
  }

  AutEquality out;
  out.algebra_side = detail::automorphisms(detail::from_partial(upper_set(algebra, c).algebra));

  std::vector<char> le(n * n, 0);
  for (const auto& [a, b] : poset.leq) le[position(poset, a) * n + position(poset, b)] = 1;
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        ok = le[a * n + b] == le[static_cast<std::size_t>(pi[a]) * n + static_cast<std::size_t>(pi[b])];
      }
    }
    if (ok) out.order_side.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));

  std::sort(out.algebra_side.begin(), out.algebra_side.end());
  std::set_symmetric_difference(out.algebra_side.begin(), out.algebra_side.end(), out.order_side.begin(),
                                out.order_side.end(), std::back_inserter(out.difference));
  out.equal = out.difference.empty();
  return out;
}

}  // namespace monoalg
