#include "brute.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "monoalg/error.hpp"

namespace monoalg::detail {

namespace {

void check_size(std::size_t n) {
  if (n > 31) throw BoundExceeded("brute-force search is limited to 31 elements");
}

bool in(std::uint32_t set, Element x) { return x >= 0 && ((set >> x) & 1u) != 0; }

}  // namespace

UnaryStructure from_total(const FiniteMonounary& algebra) {
  check_size(algebra.size());
  return {algebra.size(), {algebra.table()}};
}

UnaryStructure from_partial(const PartialMonounary& algebra) {
  check_size(algebra.size());
  std::vector<Element> op(algebra.size());
  for (std::size_t x = 0; x < algebra.size(); ++x) op[x] = algebra.table()[x].value_or(-1);
  return {algebra.size(), {std::move(op)}};
}

std::vector<Element> members(std::uint32_t set) {
  std::vector<Element> out;
  for (Element x = 0; set >> x; ++x) {
    if (in(set, x)) out.push_back(x);
  }
  return out;
}

std::vector<Permutation> automorphisms(const UnaryStructure& s) {
  Permutation pi(s.size);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (const auto& op : s.ops) {
      for (std::size_t x = 0; x < s.size && ok; ++x) {
        const Element fx = op[x];
        const Element fpx = op[static_cast<std::size_t>(pi[x])];
        ok = fx < 0 ? fpx < 0 : (fpx >= 0 && pi[static_cast<std::size_t>(fx)] == fpx);
      }
    }
    if (ok) out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

std::uint32_t closure(const UnaryStructure& s, std::uint32_t set) {
  std::uint32_t current = set;
  while (true) {
    std::uint32_t next = current;
    for (Element x : members(current)) {
      for (const auto& op : s.ops) {
        if (op[static_cast<std::size_t>(x)] >= 0) next |= 1u << op[static_cast<std::size_t>(x)];
      }
    }
    if (next == current) return current;
    current = next;
  }
}

std::vector<std::uint32_t> subuniverses(const UnaryStructure& s) {
  std::set<std::uint32_t> found;
  for (std::uint32_t set = 1; set < (1u << s.size); ++set) found.insert(closure(s, set));
  return {found.begin(), found.end()};
}

std::vector<std::vector<Element>> induced_isomorphisms(const UnaryStructure& s, std::uint32_t from,
                                                       std::uint32_t to) {
  std::vector<std::vector<Element>> out;
  const auto src = members(from);
  const auto dst = members(to);
  if (src.size() != dst.size()) return out;

  std::vector<Element> image(src.size(), -1);
  std::vector<char> used(dst.size(), 0);
  // φ must agree on "f(x) lies in the set" and on every equation f(a) = b
  // among already assigned elements.
  auto consistent = [&](std::size_t i) {
    const Element x = src[i];
    const Element y = image[i];
    for (const auto& op : s.ops) {
      const Element fx = op[static_cast<std::size_t>(x)];
      const Element fy = op[static_cast<std::size_t>(y)];
      if (in(from, fx) != in(to, fy)) return false;
      for (std::size_t j = 0; j <= i; ++j) {
        if ((fx == src[j]) != (fy == image[j])) return false;
        const Element fxj = op[static_cast<std::size_t>(src[j])];
        const Element fyj = op[static_cast<std::size_t>(image[j])];
        if ((fxj == x) != (fyj == y)) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == src.size()) {
      out.push_back(image);
      return;
    }
    for (std::size_t k = 0; k < dst.size(); ++k) {
      if (used[k]) continue;
      used[k] = 1;
      image[i] = dst[k];
      if (consistent(i)) self(self, i + 1);
      used[k] = 0;
    }
    image[i] = -1;
  };
  search(search, 0);
  return out;
}

bool isomorphisms_extend(const UnaryStructure& s, const std::vector<Permutation>& group,
                         const std::vector<std::uint32_t>& sets) {
  std::map<std::uint32_t, std::set<std::vector<Element>>> restrictions;
  auto restricted = [&](std::uint32_t set) -> const std::set<std::vector<Element>>& {
    auto it = restrictions.find(set);
    if (it != restrictions.end()) return it->second;
    const auto xs = members(set);
    std::set<std::vector<Element>> r;
    for (const auto& g : group) {
      std::vector<Element> image;
      image.reserve(xs.size());
      for (Element x : xs) image.push_back(g[static_cast<std::size_t>(x)]);
      r.insert(std::move(image));
    }
    return restrictions.emplace(set, std::move(r)).first->second;
  };
  for (std::uint32_t from : sets) {
    for (std::uint32_t to : sets) {
      if (std::popcount(from) != std::popcount(to)) continue;
      const auto isos = induced_isomorphisms(s, from, to);
      if (isos.empty()) continue;
      const auto& ok = restricted(from);
      for (const auto& phi : isos) {
        if (!ok.count(phi)) return false;
      }
    }
  }
  return true;
}

}  // namespace monoalg::detail
