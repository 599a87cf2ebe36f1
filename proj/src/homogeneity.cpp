#include "monoalg/homogeneity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "brute.hpp"
#include "canonical.hpp"
#include "monoalg/error.hpp"
#include "monoalg/orbits.hpp"

namespace monoalg {

namespace {

void check_bound(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw BoundExceeded("brute-force oracle needs n <= " + std::to_string(bound) + ", got n = " +
                        std::to_string(n) + " (raise it with --bound or MONOALG_BOUND)");
  }
}

// Every n-element subset as a bitmask.
std::vector<std::uint32_t> subsets_of_size(std::size_t universe, std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t set = 1; set < (1u << universe); ++set) {
    if (static_cast<std::size_t>(std::popcount(set)) == n) out.push_back(set);
  }
  return out;
}

bool uh_oracle(const detail::UnaryStructure& s, bool single_generators) {
  const auto group = detail::automorphisms(s);
  std::vector<std::uint32_t> sets;
  if (single_generators) {
    for (std::size_t x = 0; x < s.size; ++x) sets.push_back(detail::closure(s, 1u << x));
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  } else {
    sets = detail::subuniverses(s);
  }
  return detail::isomorphisms_extend(s, group, sets);
}

struct ComponentShape {
  std::size_t cycle = 0;
  std::size_t size = 0;
  std::size_t height = 0;
};

std::vector<ComponentShape> shapes(const FiniteMonounary& algebra) {
  const auto r = structure_report(algebra);
  std::vector<ComponentShape> out;
  for (const auto& comp : r.components) {
    ComponentShape c{r.cycle_size_of[static_cast<std::size_t>(comp.front())], comp.size(), 0};
    for (Element x : comp) c.height = std::max(c.height, r.heights[static_cast<std::size_t>(x)]);
    out.push_back(c);
  }
  return out;
}

}  // namespace

bool is_ultrahomogeneous(const FiniteMonounary& algebra) {
  const auto f = detail::canonical_form(algebra.table());
  const auto& s = f.skel;
  std::vector<std::size_t> preimages(algebra.size(), 0);
  for (Element y : algebra.table()) ++preimages[static_cast<std::size_t>(y)];

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> level_count;
  std::map<std::size_t, std::size_t> class_of_cycle_size;
  for (std::size_t x = 0; x < algebra.size(); ++x) {
    const std::size_t id = s.component[x];
    const std::size_t cycle = s.cycles[id].size();
    const auto [it, fresh] = level_count.try_emplace({s.height[x], cycle}, preimages[x]);
    if (!fresh && it->second != preimages[x]) return false;
    const auto [jt, first] = class_of_cycle_size.try_emplace(cycle, f.klass[id]);
    if (!first && jt->second != f.klass[id]) return false;
  }
  return true;
}

bool is_ultrahomogeneous_oracle(const FiniteMonounary& algebra, std::size_t bound) {
  check_bound(algebra.size(), bound);
  return uh_oracle(detail::from_total(algebra), false);
}

bool is_1_ultrahomogeneous_oracle(const FiniteMonounary& algebra, std::size_t bound) {
  check_bound(algebra.size(), bound);
  return uh_oracle(detail::from_total(algebra), true);
}

bool is_n_homogeneous(const FiniteMonounary& algebra, std::size_t n, std::size_t bound) {
  check_bound(algebra.size(), bound);
  const auto s = detail::from_total(algebra);
  std::vector<std::uint32_t> sets;
  for (std::uint32_t set : detail::subuniverses(s)) {
    if (static_cast<std::size_t>(std::popcount(set)) == n) sets.push_back(set);
  }
  if (sets.empty()) return true;
  return detail::isomorphisms_extend(s, detail::automorphisms(s), sets);
}

bool is_partially_n_homogeneous(const FiniteMonounary& algebra, std::size_t n, std::size_t bound) {
  check_bound(algebra.size(), bound);
  if (n == 0 || n > algebra.size()) return true;
  const auto s = detail::from_total(algebra);
  return detail::isomorphisms_extend(s, detail::automorphisms(s), subsets_of_size(algebra.size(), n));
}

bool is_partially_homogeneous_oracle(const FiniteMonounary& algebra, std::size_t bound) {
  check_bound(algebra.size(), bound);
  const auto s = detail::from_total(algebra);
  const auto group = detail::automorphisms(s);
  for (std::size_t n = 1; n <= algebra.size(); ++n) {
    if (!detail::isomorphisms_extend(s, group, subsets_of_size(algebra.size(), n))) return false;
  }
  return true;
}

std::string to_string(PartialPattern pattern) {
  switch (pattern) {
    case PartialPattern::kFixedPointsAndTwoCycles: return "a*Z1 + b*Z2";
    case PartialPattern::kFixedPointsAndThreeCycles: return "a*Z1 + b*Z3";
    case PartialPattern::kFixedPointsAndOneFourCycle: return "a*Z1 + Z4";
    case PartialPattern::kPointedPairs: return "a*A[1; 1]";
    case PartialPattern::kStar: return "A[1; a]";
  }
  return "?";
}

std::optional<PartialPattern> partial_pattern(const FiniteMonounary& algebra) {
  const auto comps = shapes(algebra);
  auto pure_cycles_in = [&](std::initializer_list<std::size_t> sizes) {
    return std::all_of(comps.begin(), comps.end(), [&](const ComponentShape& c) {
      return c.size == c.cycle && std::find(sizes.begin(), sizes.end(), c.cycle) != sizes.end();
    });
  };
  if (pure_cycles_in({1, 2})) return PartialPattern::kFixedPointsAndTwoCycles;
  if (pure_cycles_in({1, 3})) return PartialPattern::kFixedPointsAndThreeCycles;
  if (pure_cycles_in({1, 4}) &&
      std::count_if(comps.begin(), comps.end(), [](const ComponentShape& c) { return c.cycle == 4; }) == 1) {
    return PartialPattern::kFixedPointsAndOneFourCycle;
  }
  if (std::all_of(comps.begin(), comps.end(),
                  [](const ComponentShape& c) { return c.cycle == 1 && c.size == 2; })) {
    return PartialPattern::kPointedPairs;
  }
  if (comps.size() == 1 && comps[0].cycle == 1 && comps[0].height <= 1) return PartialPattern::kStar;
  return std::nullopt;
}

bool is_partially_homogeneous(const FiniteMonounary& algebra) {
  return partial_pattern(algebra).has_value();
}

const std::vector<LatticeEdge>& lattice_edges() {
  static const std::vector<LatticeEdge> edges{
      {"transitive => partially homogeneous", [](const LatticeReport& r) { return !r.transitive || r.partially_homogeneous; }},
      {"partially homogeneous => partially 1-homogeneous",
       [](const LatticeReport& r) { return !r.partially_homogeneous || r.partially_1_homogeneous; }},
      {"partially homogeneous => partially 2-homogeneous",
       [](const LatticeReport& r) { return !r.partially_homogeneous || r.partially_2_homogeneous; }},
      {"partially 1-homogeneous => ultrahomogeneous",
       [](const LatticeReport& r) { return !r.partially_1_homogeneous || r.ultrahomogeneous; }},
      {"partially 2-homogeneous => ultrahomogeneous",
       [](const LatticeReport& r) { return !r.partially_2_homogeneous || r.ultrahomogeneous; }},
      {"ultrahomogeneous => homogeneous", [](const LatticeReport& r) { return !r.ultrahomogeneous || r.homogeneous; }},
      {"homogeneous => 2-homogeneous", [](const LatticeReport& r) { return !r.homogeneous || r.homogeneous_2; }},
      {"2-homogeneous => 1-homogeneous", [](const LatticeReport& r) { return !r.homogeneous_2 || r.homogeneous_1; }},
      {"partially 1- and 2-homogeneous => partially homogeneous",
       [](const LatticeReport& r) {
         return !(r.partially_1_homogeneous && r.partially_2_homogeneous) || r.partially_homogeneous;
       }},
  };
  return edges;
}

std::vector<std::string> LatticeReport::violations() const {
  std::vector<std::string> out;
  for (const auto& edge : lattice_edges()) {
    if (!edge.holds(*this)) out.push_back(edge.name);
  }
  return out;
}

LatticeReport classify_lattice(const FiniteMonounary& algebra, std::size_t bound) {
  check_bound(algebra.size(), bound);
  LatticeReport r;
  r.transitive = is_transitive(algebra);
  r.partially_1_homogeneous = is_partially_n_homogeneous(algebra, 1, bound);
  r.partially_2_homogeneous = is_partially_n_homogeneous(algebra, 2, bound);
  r.partially_homogeneous = is_partially_homogeneous(algebra);
  r.ultrahomogeneous = is_ultrahomogeneous(algebra);
  r.homogeneous = r.ultrahomogeneous;
  r.homogeneous_2 = is_n_homogeneous(algebra, 2, bound);
  r.homogeneous_1 = is_n_homogeneous(algebra, 1, bound);
  return r;
}

bool pseudoforest_ultrahomogeneous(const PartialMonounary& algebra) {
  if (algebra.has_loop()) throw InvalidInput("a pseudoforest has no loops (found θ(x) = x)");
  if (algebra.domain().empty()) return true;
  if (!algebra.is_total()) return false;
  const auto total = algebra.to_total();
  const auto comps = shapes(total);
  const std::size_t cycle = comps.front().cycle;
  const bool pure = std::all_of(comps.begin(), comps.end(),
                                [&](const ComponentShape& c) { return c.size == c.cycle && c.cycle == cycle; });
  if (!pure) return false;
  return cycle == 2 || cycle == 3 || (cycle == 4 && comps.size() == 1);
}

bool digraph_ultrahomogeneous_oracle(const PartialMonounary& algebra, std::size_t bound) {
  const std::size_t n = algebra.size();
  check_bound(n, bound);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : relational_form(algebra)) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;

  auto preserves = [&](const std::vector<Element>& src, const std::vector<Element>& dst) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (adj[static_cast<std::size_t>(src[i])][static_cast<std::size_t>(src[j])] !=
            adj[static_cast<std::size_t>(dst[i])][static_cast<std::size_t>(dst[j])]) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<Element>> group;
  std::vector<Element> pi = all;
  do {
    if (preserves(all, pi)) group.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));

  for (std::uint32_t from = 1; from < (1u << n); ++from) {
    const auto src = detail::members(from);
    for (std::uint32_t to = 1; to < (1u << n); ++to) {
      if (std::popcount(from) != std::popcount(to)) continue;
      auto dst = detail::members(to);
      do {
        if (!preserves(src, dst)) continue;
        const bool extends = std::any_of(group.begin(), group.end(), [&](const std::vector<Element>& g) {
          for (std::size_t i = 0; i < src.size(); ++i) {
            if (g[static_cast<std::size_t>(src[i])] != dst[i]) return false;
          }
          return true;
        });
        if (!extends) return false;
      } while (std::next_permutation(dst.begin(), dst.end()));
    }
  }
  return true;
}

MultiunaryVerdict multiunary_brute_check(const std::vector<std::vector<Element>>& tables, std::size_t bound) {
  if (tables.empty()) throw InvalidInput("at least one operation is required");
  const std::size_t n = tables.front().size();
  detail::UnaryStructure s{n, {}};
  for (const auto& t : tables) {
    if (t.size() != n) throw InvalidInput("all operation tables must have the same length");
    s.ops.push_back(FiniteMonounary(t).table());
  }
  check_bound(n, bound);
  return {uh_oracle(s, true), uh_oracle(s, false)};
}

}  // namespace monoalg
