#include "monoalg/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "canonical.hpp"
#include "monoalg/error.hpp"

namespace monoalg {

std::vector<std::size_t> one_orbit_ids(const FiniteMonounary& algebra) {
  // x and y share an orbit iff the chains x, θx, θ²x, ... and y, θy, ... pass
  // through isomorphic trees level by level and reach cycle positions that a
  // rotation of isomorphic components can align.
  const auto f = detail::canonical_form(algebra.table());
  const std::size_t n = algebra.size();
  std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> signatures;
  std::vector<std::size_t> sig(n);
  for (Element x : f.skel.by_height) {
    const auto xu = static_cast<std::size_t>(x);
    std::tuple<int, std::size_t, std::size_t> key;
    if (f.skel.cyclic[xu]) {
      const std::size_t id = f.skel.component[xu];
      const std::size_t len = f.code[id].size();
      const std::size_t offset = (f.cycle_pos[xu] + len - f.start[id]) % len;
      key = {0, f.klass[id], offset % f.period[id]};
    } else {
      key = {1, f.rank[xu], sig[static_cast<std::size_t>(algebra(x))]};
    }
    sig[xu] = signatures.try_emplace(key, signatures.size()).first->second;
  }

  // Renumber by least member.
  std::vector<std::size_t> renumber(signatures.size(), n);
  std::vector<std::size_t> out(n);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    auto& r = renumber[sig[x]];
    if (r == n) r = next++;
    out[x] = r;
  }
  return out;
}

std::vector<std::vector<Element>> one_orbits(const FiniteMonounary& algebra) {
  const auto ids = one_orbit_ids(algebra);
  const std::size_t count = *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::vector<Element>> out(count);
  for (std::size_t x = 0; x < ids.size(); ++x) out[ids[x]].push_back(static_cast<Element>(x));
  return out;
}

bool is_transitive(const FiniteMonounary& algebra) {
  const auto ids = one_orbit_ids(algebra);
  return std::all_of(ids.begin(), ids.end(), [](std::size_t i) { return i == 0; });
}

OrbitLabeler::OrbitLabeler(FiniteMonounary algebra)
    : algebra_(std::move(algebra)), one_orbit_(one_orbit_ids(algebra_)) {}

std::size_t OrbitLabeler::extend(std::size_t prefix_label, std::span<const Element> tuple) {
  const Subalgebra sub = generated_subalgebra(algebra_, tuple);
  std::vector<std::int64_t> marks(sub.elements.size(), 0);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const auto at = std::lower_bound(sub.elements.begin(), sub.elements.end(), tuple[i]);
    marks[static_cast<std::size_t>(at - sub.elements.begin())] |= std::int64_t{1} << i;
  }
  auto key = std::make_tuple(prefix_label, one_orbit_[static_cast<std::size_t>(tuple.back())],
                             labeled_certificate(sub.algebra, marks));
  return interned_.try_emplace(std::move(key), interned_.size()).first->second;
}

std::size_t OrbitLabeler::label(std::span<const Element> tuple) {
  if (tuple.empty()) throw InvalidInput("cannot label an empty tuple");
  if (tuple.size() > 62) throw InvalidInput("at most 62 coordinates are supported");
  for (Element x : tuple) {
    if (!algebra_.contains(x)) throw InvalidInput("element " + std::to_string(x) + " is not in the algebra");
  }
  std::size_t current = kEmptyPrefix;
  for (std::size_t k = 1; k <= tuple.size(); ++k) current = extend(current, tuple.first(k));
  return current;
}

std::vector<std::uint64_t> orbit_profile(const FiniteMonounary& algebra, std::size_t k) {
  if (k == 0) throw InvalidInput("orbit profile length must be at least 1");
  OrbitLabeler labeler(algebra);
  const auto n = static_cast<Element>(algebra.size());
  // One representative tuple (with its label) per orbit of the current arity.
  std::vector<std::pair<std::vector<Element>, std::size_t>> reps{{{}, OrbitLabeler::kEmptyPrefix}};
  std::vector<std::uint64_t> profile;
  for (std::size_t arity = 1; arity <= k; ++arity) {
    std::map<std::size_t, std::vector<Element>> next;
    for (const auto& [prefix, prefix_label] : reps) {
      std::vector<Element> tuple = prefix;
      tuple.push_back(0);
      for (Element x = 0; x < n; ++x) {
        tuple.back() = x;
        next.try_emplace(labeler.extend(prefix_label, tuple), tuple);
      }
    }
    reps.clear();
    for (auto& [label, tuple] : next) reps.emplace_back(std::move(tuple), label);
    profile.push_back(reps.size());
  }
  return profile;
}

std::uint64_t n_orbit_count(const FiniteMonounary& algebra, std::size_t arity) {
  if (arity == 0) throw InvalidInput("arity must be at least 1");
  return orbit_profile(algebra, arity).back();
}

std::uint64_t n_orbit_count_bruteforce(const FiniteMonounary& algebra, std::size_t arity,
                                       std::uint64_t tuple_bound, std::size_t oracle_bound) {
  if (arity == 0) throw InvalidInput("arity must be at least 1");
  const std::size_t n = algebra.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (total > tuple_bound / n) {
      throw BoundExceeded("|A|^n exceeds the tuple bound of " + std::to_string(tuple_bound));
    }
    total *= n;
  }
  const auto group = brute_force_automorphisms(algebra, oracle_bound);

  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> digits(arity);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = arity; i-- > 0;) {
      digits[i] = rest % n;
      rest /= n;
    }
    for (const auto& g : group) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < arity; ++i) image = image * n + static_cast<std::uint64_t>(g[digits[i]]);
      const auto a = find(index);
      const auto b = find(image);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::uint64_t roots = 0;
  for (std::uint64_t i = 0; i < total; ++i) roots += find(i) == i ? 1 : 0;
  return roots;
}

}  // namespace monoalg
