#include "monoalg/iso.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "canonical.hpp"
#include "monoalg/error.hpp"

namespace monoalg {

namespace {

using detail::CanonicalForm;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_factorial(std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 2; i <= k; ++i) out = sat_mul(out, i);
  return out;
}

// Maximal runs of equal rank inside kids[x], as [begin, end) offsets.
std::vector<std::pair<std::size_t, std::size_t>> rank_runs(const CanonicalForm& f, Element x) {
  const auto& kids = f.kids[static_cast<std::size_t>(x)];
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= kids.size(); ++i) {
    if (i == kids.size() ||
        f.rank[static_cast<std::size_t>(kids[i])] != f.rank[static_cast<std::size_t>(kids[begin])]) {
      runs.emplace_back(begin, i);
      begin = i;
    }
  }
  return runs;
}

// Tree automorphism counts |Aut(A_x)| for every x, deepest first.
std::vector<std::uint64_t> tree_counts(const CanonicalForm& f) {
  std::vector<std::uint64_t> count(f.rank.size(), 1);
  const auto& order = f.skel.by_height;
  for (std::size_t i = order.size(); i-- > 0;) {
    const Element x = order[i];
    std::uint64_t c = 1;
    for (Element k : f.kids[static_cast<std::size_t>(x)]) c = sat_mul(c, count[static_cast<std::size_t>(k)]);
    for (auto [b, e] : rank_runs(f, x)) c = sat_mul(c, sat_factorial(e - b));
    count[static_cast<std::size_t>(x)] = c;
  }
  return count;
}

// Components of the source side grouped with the target side by class.
struct Pairing {
  std::vector<std::vector<std::size_t>> sources;
  std::vector<std::vector<std::size_t>> targets;
  bool balanced = true;
};

Pairing pair_components(const CanonicalForm& f, std::size_t split, bool same_side) {
  std::size_t classes = 0;
  for (std::size_t k : f.klass) classes = std::max(classes, k + 1);
  Pairing p;
  p.sources.resize(classes);
  p.targets.resize(classes);
  for (std::size_t id : f.order) {
    const bool left = static_cast<std::size_t>(f.skel.cycles[id].front()) < split;
    if (same_side || left) p.sources[f.klass[id]].push_back(id);
    if (same_side || !left) p.targets[f.klass[id]].push_back(id);
  }
  for (std::size_t k = 0; k < classes; ++k) {
    if (p.sources[k].size() != p.targets[k].size()) p.balanced = false;
  }
  return p;
}

// Exhaustive assembly of every structure-preserving bijection between the
// source and target sides of a canonical form.
class Enumerator {
 public:
  Enumerator(const CanonicalForm& f, std::size_t split, std::size_t offset)
      : f_(f), split_(split), offset_(offset) {}

  std::vector<std::vector<Element>> run(const Pairing& pairing) {
    State state;
    state.map.assign(split_, -1);
    for (std::size_t k = 0; k < pairing.sources.size(); ++k) {
      if (pairing.sources[k].empty()) continue;
      Task t{Task::kComponents, 0, 0, 0, 0, k};
      state.stack.push_back(t);
    }
    pairing_ = &pairing;
    results_.clear();
    drive(std::move(state));
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  struct Task {
    enum Kind { kNode, kRun, kCycle, kComponents } kind;
    Element x, y;
    std::size_t begin, end;
    std::size_t klass;
  };
  struct State {
    std::vector<Element> map;
    std::vector<Task> stack;
  };

  void map_node(State& s, Element x, Element y) {
    s.map[static_cast<std::size_t>(x)] = static_cast<Element>(y - static_cast<Element>(offset_));
    for (auto [b, e] : rank_runs(f_, x)) {
      if (e - b == 1) {
        s.stack.push_back({Task::kNode, f_.kids[static_cast<std::size_t>(x)][b],
                           f_.kids[static_cast<std::size_t>(y)][b], 0, 0, 0});
      } else {
        s.stack.push_back({Task::kRun, x, y, b, e, 0});
      }
    }
  }

  void map_cycle(State& s, std::size_t from, std::size_t to, std::size_t shift) {
    const auto& a = f_.skel.cycles[from];
    const auto& b = f_.skel.cycles[to];
    for (std::size_t i = 0; i < a.size(); ++i) {
      s.stack.push_back({Task::kNode, a[i], b[(i + shift) % a.size()], 0, 0, 0});
    }
  }

  void drive(State s) {
    while (!s.stack.empty()) {
      const Task t = s.stack.back();
      s.stack.pop_back();
      switch (t.kind) {
        case Task::kNode:
          map_node(s, t.x, t.y);
          break;
        case Task::kRun: {
          const auto& xs = f_.kids[static_cast<std::size_t>(t.x)];
          const auto& ys = f_.kids[static_cast<std::size_t>(t.y)];
          std::vector<std::size_t> sigma(t.end - t.begin);
          std::iota(sigma.begin(), sigma.end(), 0);
          do {
            State next = s;
            for (std::size_t i = 0; i < sigma.size(); ++i) {
              next.stack.push_back({Task::kNode, xs[t.begin + i], ys[t.begin + sigma[i]], 0, 0, 0});
            }
            drive(std::move(next));
          } while (std::next_permutation(sigma.begin(), sigma.end()));
          return;
        }
        case Task::kCycle: {
          const std::size_t from = t.begin;
          const std::size_t to = t.end;
          const auto shifts = detail::matching_shifts(f_, from, to);
          if (shifts.size() == 1) {
            map_cycle(s, from, to, shifts.front());
            break;
          }
          for (std::size_t shift : shifts) {
            State next = s;
            map_cycle(next, from, to, shift);
            drive(std::move(next));
          }
          return;
        }
        case Task::kComponents: {
          const auto& src = pairing_->sources[t.klass];
          const auto& tgt = pairing_->targets[t.klass];
          std::vector<std::size_t> sigma(src.size());
          std::iota(sigma.begin(), sigma.end(), 0);
          if (sigma.size() == 1) {
            s.stack.push_back({Task::kCycle, 0, 0, src[0], tgt[0], 0});
            break;
          }
          do {
            State next = s;
            for (std::size_t i = 0; i < sigma.size(); ++i) {
              next.stack.push_back({Task::kCycle, 0, 0, src[i], tgt[sigma[i]], 0});
            }
            drive(std::move(next));
          } while (std::next_permutation(sigma.begin(), sigma.end()));
          return;
        }
      }
    }
    results_.push_back(std::move(s.map));
  }

  const CanonicalForm& f_;
  std::size_t split_;
  std::size_t offset_;
  const Pairing* pairing_ = nullptr;
  std::vector<std::vector<Element>> results_;
};

std::uint64_t count_maps(const CanonicalForm& f, const Pairing& p) {
  if (!p.balanced) return 0;
  const auto trees = tree_counts(f);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < p.sources.size(); ++k) {
    const auto& src = p.sources[k];
    if (src.empty()) continue;
    const std::size_t id = src.front();
    std::uint64_t per = f.code[id].size() / f.period[id];
    for (Element c : f.skel.cycles[id]) per = sat_mul(per, trees[static_cast<std::size_t>(c)]);
    total = sat_mul(total, sat_factorial(src.size()));
    for (std::size_t i = 0; i < src.size(); ++i) total = sat_mul(total, per);
  }
  return total;
}

std::vector<Element> concatenate(const FiniteMonounary& a, const FiniteMonounary& b) {
  std::vector<Element> table = a.table();
  const auto offset = static_cast<Element>(a.size());
  for (Element y : b.table()) table.push_back(y + offset);
  return table;
}

// One bijection source side -> target side respecting `required` (entries of
// -1 are free), or nullopt when the requirements cannot be met.
std::optional<std::vector<Element>> extend_one(const CanonicalForm& f,
                                               std::span<const Element> table, std::size_t split,
                                               std::size_t offset, bool same_side,
                                               std::vector<Element> required) {
  const auto& s = f.skel;
  std::vector<char> used(table.size(), 0);
  for (std::size_t x = 0; x < required.size(); ++x) {
    const Element y = required[x];
    if (y < 0) continue;
    const auto yu = static_cast<std::size_t>(y);
    if (f.rank[x] != f.rank[yu] || s.height[x] != s.height[yu] ||
        f.klass[s.component[x]] != f.klass[s.component[yu]]) {
      return std::nullopt;
    }
    if (used[yu]) return std::nullopt;
    used[yu] = 1;
  }

  const Pairing p = pair_components(f, split, same_side);
  if (!p.balanced) return std::nullopt;

  std::vector<Element> result(split, -1);
  std::vector<std::pair<Element, Element>> stack;
  auto push_cycle = [&](std::size_t from, std::size_t to, std::size_t shift) {
    const auto& a = s.cycles[from];
    const auto& b = s.cycles[to];
    for (std::size_t i = 0; i < a.size(); ++i) stack.emplace_back(a[i], b[(i + shift) % a.size()]);
  };

  for (std::size_t k = 0; k < p.sources.size(); ++k) {
    std::vector<char> taken(p.targets[k].size(), 0);
    std::vector<std::size_t> free_sources;
    for (std::size_t from : p.sources[k]) {
      const Element c = s.cycles[from].front();
      const Element image = required[static_cast<std::size_t>(c)];
      if (image < 0) {
        free_sources.push_back(from);
        continue;
      }
      const std::size_t to = s.component[static_cast<std::size_t>(image)];
      const auto where = std::find(p.targets[k].begin(), p.targets[k].end(), to);
      taken[static_cast<std::size_t>(where - p.targets[k].begin())] = 1;
      const std::size_t len = s.cycles[from].size();
      push_cycle(from, to, (f.cycle_pos[static_cast<std::size_t>(image)] + len) % len);
    }
    std::size_t next = 0;
    for (std::size_t from : free_sources) {
      while (taken[next]) ++next;
      taken[next] = 1;
      const std::size_t to = p.targets[k][next];
      push_cycle(from, to, detail::matching_shifts(f, from, to).front());
    }
  }

  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    result[static_cast<std::size_t>(x)] = static_cast<Element>(y - static_cast<Element>(offset));
    const auto& xs = f.kids[static_cast<std::size_t>(x)];
    const auto& ys = f.kids[static_cast<std::size_t>(y)];
    for (auto [b, e] : rank_runs(f, x)) {
      std::vector<char> claimed(e - b, 0);
      std::vector<Element> free_children;
      for (std::size_t i = b; i < e; ++i) {
        const Element want = required[static_cast<std::size_t>(xs[i])];
        if (want < 0) {
          free_children.push_back(xs[i]);
          continue;
        }
        const auto at = std::find(ys.begin() + static_cast<std::ptrdiff_t>(b),
                                  ys.begin() + static_cast<std::ptrdiff_t>(e), want);
        claimed[static_cast<std::size_t>(at - ys.begin()) - b] = 1;
        stack.emplace_back(xs[i], want);
      }
      std::size_t j = 0;
      for (Element child : free_children) {
        while (claimed[j]) ++j;
        claimed[j] = 1;
        stack.emplace_back(child, ys[b + j]);
      }
    }
  }
  return result;
}


// Propagates u ↦ v along θ: an automorphism fixing u ↦ v must send θᵏ(u) to
// θᵏ(v). Returns false on a clash.
bool propagate(std::span<const Element> table, std::vector<Element>& required, Element u, Element v) {
  Element x = u;
  Element y = v;
  while (true) {
    auto& slot = required[static_cast<std::size_t>(x)];
    if (slot >= 0) return slot == y;
    slot = y;
    x = table[static_cast<std::size_t>(x)];
    y = table[static_cast<std::size_t>(y)];
  }
}

void check_partial_map(const PartialMap& partial, std::size_t from_size, std::size_t to_size) {
  std::set<Element> domain;
  std::set<Element> image;
  for (const auto& [x, y] : partial) {
    if (x < 0 || static_cast<std::size_t>(x) >= from_size || y < 0 ||
        static_cast<std::size_t>(y) >= to_size) {
      throw InvalidInput("partial map entry " + std::to_string(x) + " -> " + std::to_string(y) +
                         " is out of range");
    }
    const bool fresh = domain.insert(x).second;
    if (!fresh) {
      const auto it = std::find_if(partial.begin(), partial.end(),
                                   [&](const auto& e) { return e.first == x && e.second != y; });
      if (it != partial.end()) throw InvalidInput("partial map is not a function at " + std::to_string(x));
      continue;
    }
    if (!image.insert(y).second) throw InvalidInput("partial map is not injective");
  }
}

}  // namespace

std::string Certificate::to_string() const {
  std::ostringstream out;
  out << "f=[";
  for (std::size_t i = 0; i < table.size(); ++i) out << (i ? "," : "") << table[i];
  out << "]";
  if (!labels.empty()) {
    out << " marks=[";
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
    out << "]";
  }
  return out.str();
}

std::size_t CertificateHash::operator()(const Certificate& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (Element x : c.table) mix(static_cast<std::uint64_t>(x));
  mix(c.labels.size());
  for (std::int64_t l : c.labels) mix(static_cast<std::uint64_t>(l));
  return h;
}

Certificate labeled_certificate(const FiniteMonounary& algebra, std::span<const std::int64_t> labels) {
  if (!labels.empty() && labels.size() != algebra.size()) {
    throw InvalidInput("label count does not match algebra size");
  }
  const auto form = detail::canonical_form(algebra.table(), labels);
  const auto seq = detail::canonical_sequence(form);
  std::vector<Element> inverse(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) inverse[static_cast<std::size_t>(seq[i])] = static_cast<Element>(i);
  Certificate cert;
  cert.table.resize(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    cert.table[i] = inverse[static_cast<std::size_t>(algebra(seq[i]))];
  }
  if (!labels.empty()) {
    cert.labels.resize(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) cert.labels[i] = labels[static_cast<std::size_t>(seq[i])];
  }
  return cert;
}

Certificate canonical_certificate(const FiniteMonounary& algebra) {
  return labeled_certificate(algebra, {});
}

Certificate pointed_certificate(const FiniteMonounary& algebra, Element x) {
  if (!algebra.contains(x)) throw InvalidInput("element " + std::to_string(x) + " is not in the algebra");
  const auto s = detail::skeleton(algebra.table());
  const std::size_t id = s.component[static_cast<std::size_t>(x)];
  std::vector<Element> members;
  for (std::size_t y = 0; y < algebra.size(); ++y) {
    if (s.component[y] == id) members.push_back(static_cast<Element>(y));
  }
  std::vector<Element> table(members.size());
  std::vector<std::int64_t> labels(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element image = algebra(members[i]);
    table[i] = static_cast<Element>(std::lower_bound(members.begin(), members.end(), image) - members.begin());
    if (members[i] == x) labels[i] = 1;
  }
  return labeled_certificate(FiniteMonounary(std::move(table)), labels);
}

Certificate marked_certificate(const FiniteMonounary& algebra, std::span<const Element> tuple) {
  if (tuple.size() > 62) throw InvalidInput("at most 62 marked coordinates are supported");
  std::vector<std::int64_t> labels(algebra.size(), 0);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!algebra.contains(tuple[i])) {
      throw InvalidInput("element " + std::to_string(tuple[i]) + " is not in the algebra");
    }
    labels[static_cast<std::size_t>(tuple[i])] |= std::int64_t{1} << i;
  }
  return labeled_certificate(algebra, labels);
}

std::vector<Element> canonical_sequence(const FiniteMonounary& algebra) {
  return detail::canonical_sequence(detail::canonical_form(algebra.table()));
}

bool are_isomorphic(const FiniteMonounary& a, const FiniteMonounary& b) {
  return a.size() == b.size() && canonical_certificate(a) == canonical_certificate(b);
}

bool is_automorphism(const FiniteMonounary& algebra, const Permutation& pi) {
  const std::size_t n = algebra.size();
  if (pi.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Element y : pi) {
    if (y < 0 || static_cast<std::size_t>(y) >= n || hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (pi[static_cast<std::size_t>(algebra(static_cast<Element>(x)))] != algebra(pi[x])) return false;
  }
  return true;
}

std::uint64_t automorphism_count(const FiniteMonounary& algebra) {
  const auto form = detail::canonical_form(algebra.table());
  return count_maps(form, pair_components(form, algebra.size(), true));
}

std::vector<Permutation> enumerate_automorphisms(const FiniteMonounary& algebra, std::uint64_t cap) {
  const auto form = detail::canonical_form(algebra.table());
  const Pairing pairing = pair_components(form, algebra.size(), true);
  const std::uint64_t count = count_maps(form, pairing);
  if (count > cap) {
    throw BoundExceeded("automorphism group has " +
                        (count == kSaturated ? std::string("more than 2^64") : std::to_string(count)) +
                        " elements, above the cap of " + std::to_string(cap));
  }
  return Enumerator(form, algebra.size(), 0).run(pairing);
}

std::vector<Permutation> brute_force_automorphisms(const FiniteMonounary& algebra, std::size_t bound) {
  const std::size_t n = algebra.size();
  if (n > bound) {
    throw BoundExceeded("brute-force automorphism search needs n <= " + std::to_string(bound) +
                        ", got n = " + std::to_string(n));
  }
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<Permutation> out;
  do {
    if (is_automorphism(algebra, pi)) out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

std::optional<std::vector<Element>> extend_to_isomorphism(const FiniteMonounary& a,
                                                          const FiniteMonounary& b,
                                                          const PartialMap& partial) {
  check_partial_map(partial, a.size(), b.size());
  if (a.size() != b.size()) return std::nullopt;
  const auto table = concatenate(a, b);
  const auto offset = static_cast<Element>(a.size());
  std::vector<Element> required(table.size(), -1);
  for (const auto& [x, y] : partial) {
    if (!propagate(table, required, x, y + offset)) return std::nullopt;
  }
  const auto form = detail::canonical_form(table);
  return extend_one(form, table, a.size(), a.size(), false, std::move(required));
}

std::optional<Permutation> extend_to_automorphism(const FiniteMonounary& algebra,
                                                  const PartialMap& partial) {
  check_partial_map(partial, algebra.size(), algebra.size());
  std::vector<Element> required(algebra.size(), -1);
  for (const auto& [x, y] : partial) {
    if (!propagate(algebra.table(), required, x, y)) return std::nullopt;
  }
  const auto form = detail::canonical_form(algebra.table());
  return extend_one(form, algebra.table(), algebra.size(), 0, true, std::move(required));
}

std::vector<std::vector<Element>> all_isomorphisms(const FiniteMonounary& a, const FiniteMonounary& b,
                                                   std::uint64_t cap) {
  if (a.size() != b.size()) return {};
  const auto table = concatenate(a, b);
  const auto form = detail::canonical_form(table);
  const Pairing pairing = pair_components(form, a.size(), false);
  const std::uint64_t count = count_maps(form, pairing);
  if (count == 0) return {};
  if (count > cap) {
    throw BoundExceeded("more than " + std::to_string(cap) + " isomorphisms");
  }
  return Enumerator(form, a.size(), a.size()).run(pairing);
}

std::vector<SubalgebraIsomorphism> isomorphisms_between(const FiniteMonounary& algebra,
                                                        std::span<const Element> s,
                                                        std::span<const Element> t,
                                                        std::size_t bound) {
  const Subalgebra from = generated_subalgebra(algebra, s);
  const Subalgebra to = generated_subalgebra(algebra, t);
  if (from.elements.size() > bound) {
    throw BoundExceeded("generated subalgebra has " + std::to_string(from.elements.size()) +
                        " elements, above the bound of " + std::to_string(bound));
  }
  std::vector<SubalgebraIsomorphism> out;
  for (const auto& map : all_isomorphisms(from.algebra, to.algebra)) {
    SubalgebraIsomorphism iso{from.elements, {}};
    iso.image.reserve(map.size());
    for (Element y : map) iso.image.push_back(to.elements[static_cast<std::size_t>(y)]);
    out.push_back(std::move(iso));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monoalg
