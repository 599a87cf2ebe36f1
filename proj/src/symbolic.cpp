#include "monoalg/symbolic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "monoalg/error.hpp"
#include "skeleton.hpp"

namespace monoalg {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_nonzero(Cardinal c, const char* what) {
  if (c.is_zero()) throw InvalidInput(std::string("zero cardinal where forbidden: ") + what);
}

void strip_tail(std::vector<Cardinal>& prefix, const std::optional<Cardinal>& tail) {
  if (!tail) return;
  while (!prefix.empty() && prefix.back() == *tail) prefix.pop_back();
}

std::string levels_to_string(const std::vector<Cardinal>& prefix, const std::optional<Cardinal>& tail) {
  std::string out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += prefix[i].to_string();
  }
  if (tail) {
    out += prefix.empty() ? " ; " : "; ";
    out += tail->to_string();
  }
  return out;
}

// Level i of a profile: the number of preimages of each element at height i.
std::optional<Cardinal> level(const std::vector<Cardinal>& prefix, const std::optional<Cardinal>& tail,
                              std::size_t i) {
  if (i < prefix.size()) return prefix[i];
  return tail;
}

std::vector<Cardinal> cut(const std::vector<Cardinal>& prefix, const std::optional<Cardinal>& tail,
                          std::uint64_t h) {
  std::vector<Cardinal> out;
  for (std::size_t i = 0; i < h; ++i) {
    auto a = level(prefix, tail, i);
    if (!a) break;
    out.push_back(*a);
  }
  return out;
}

bool is_pure_cycle(const Descriptor& d) {
  const auto* p = std::get_if<Profile>(&d);
  return p != nullptr && p->prefix.empty() && !p->tail;
}

bool is_cycle(const Descriptor& d, std::uint64_t n) {
  return is_pure_cycle(d) && std::get<Profile>(d).cycle == n;
}

// Checks that the cyclic part has one type per cycle size.
bool profiles_uniform(const SymbolicAlgebra& s) {
  if (s.families().size() > 1) return false;
  std::set<std::uint64_t> sizes;
  for (const Term& t : s.terms()) {
    const auto* p = std::get_if<Profile>(&t.descriptor);
    if (p == nullptr) continue;
    if (!sizes.insert(p->cycle).second) return false;
    if (!s.families().empty() && s.families().front().member(p->cycle) != *p) return false;
  }
  return true;
}

}  // namespace

std::uint64_t Cardinal::value() const {
  if (omega_) throw InvalidInput("cardinal ω has no finite value");
  return value_;
}

Cardinal operator+(Cardinal a, Cardinal b) {
  if (a.omega_ || b.omega_) return Cardinal::omega();
  if (a.value_ > kMax - b.value_) throw InvalidInput("cardinal arithmetic overflow");
  return Cardinal(a.value_ + b.value_);
}

Cardinal operator*(Cardinal a, Cardinal b) {
  if (a.is_zero() || b.is_zero()) return Cardinal(0);
  if (a.omega_ || b.omega_) return Cardinal::omega();
  if (a.value_ > kMax / b.value_) throw InvalidInput("cardinal arithmetic overflow");
  return Cardinal(a.value_ * b.value_);
}

std::string Cardinal::to_string() const { return omega_ ? "w" : std::to_string(value_); }

Descriptor normalize(Descriptor d) {
  std::visit(Overloaded{
                 [](Profile& p) {
                   if (p.cycle == 0) throw InvalidInput("cycle size must be at least 1");
                   for (Cardinal c : p.prefix) require_nonzero(c, "profile level");
                   if (p.tail) require_nonzero(*p.tail, "profile tail");
                   strip_tail(p.prefix, p.tail);
                 },
                 [](Bee& b) { require_nonzero(b.degree, "B[.] degree"); },
                 [](NSucc&) {},
             },
             d);
  return d;
}

bool descriptors_isomorphic(const Descriptor& a, const Descriptor& b) {
  return normalize(a) == normalize(b);
}

std::string to_string(const Descriptor& d) {
  return std::visit(Overloaded{
                        [](const Profile& p) -> std::string {
                          if (p.prefix.empty() && !p.tail) return "Z" + std::to_string(p.cycle);
                          return "A[" + std::to_string(p.cycle) + ";" + levels_to_string(p.prefix, p.tail) + "]";
                        },
                        [](const Bee& b) -> std::string { return "B[" + b.degree.to_string() + "]"; },
                        [](const NSucc&) -> std::string { return "N"; },
                    },
                    d);
}

Profile CycleFamily::member(std::uint64_t n) const {
  Profile p{n, prefix, tail};
  strip_tail(p.prefix, p.tail);
  return p;
}

SymbolicAlgebra::SymbolicAlgebra(std::vector<Term> terms, std::vector<CycleFamily> families) {
  std::map<Descriptor, Cardinal> merged;
  for (Term& t : terms) {
    require_nonzero(t.multiplicity, "multiplicity");
    Descriptor d = normalize(std::move(t.descriptor));
    auto [it, inserted] = merged.try_emplace(std::move(d), t.multiplicity);
    if (!inserted) it->second = it->second + t.multiplicity;
  }
  for (auto& [d, m] : merged) terms_.push_back(Term{m, d});

  std::map<std::pair<std::vector<Cardinal>, std::optional<Cardinal>>, Cardinal> fams;
  for (CycleFamily& f : families) {
    require_nonzero(f.multiplicity, "multiplicity");
    for (Cardinal c : f.prefix) require_nonzero(c, "profile level");
    if (f.tail) require_nonzero(*f.tail, "profile tail");
    strip_tail(f.prefix, f.tail);
    auto [it, inserted] = fams.try_emplace({f.prefix, f.tail}, f.multiplicity);
    if (!inserted) it->second = it->second + f.multiplicity;
  }
  for (auto& [key, m] : fams) families_.push_back(CycleFamily{m, key.first, key.second});
}

std::string to_string(const SymbolicAlgebra& s) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  for (const Term& t : s.terms()) {
    sep();
    if (t.multiplicity != Cardinal(1)) out << t.multiplicity.to_string() << '*';
    out << to_string(t.descriptor);
  }
  for (const CycleFamily& f : s.families()) {
    sep();
    out << "sum_n ";
    if (f.multiplicity != Cardinal(1)) out << f.multiplicity.to_string() << '*';
    if (f.prefix.empty() && !f.tail) {
      out << "Z_n";
    } else {
      out << "A[n;" << levels_to_string(f.prefix, f.tail) << ']';
    }
  }
  return out.str();
}

Cardinal height(const Descriptor& d) {
  const auto* p = std::get_if<Profile>(&d);
  if (p == nullptr || p->tail) return Cardinal::omega();
  return Cardinal(p->prefix.size());
}

bool is_locally_finite(const SymbolicAlgebra& s) {
  return std::all_of(s.terms().begin(), s.terms().end(),
                     [](const Term& t) { return std::holds_alternative<Profile>(t.descriptor); });
}

bool is_ulf(const SymbolicAlgebra& s) {
  if (!is_locally_finite(s) || !s.families().empty()) return false;
  return std::all_of(s.terms().begin(), s.terms().end(),
                     [](const Term& t) { return !std::get<Profile>(t.descriptor).tail; });
}

Cardinal o1(const SymbolicAlgebra& s) {
  if (!s.families().empty()) return Cardinal::omega();
  Cardinal total(0);
  for (const Term& t : s.terms()) {
    if (std::holds_alternative<Bee>(t.descriptor)) {
      total = total + Cardinal(1);
    } else {
      total = total + height(t.descriptor) + Cardinal(1);
    }
  }
  return total;
}

bool is_omega_categorical(const SymbolicAlgebra& s) {
  return is_locally_finite(s) && o1(s).is_finite();
}

bool is_ultrahomogeneous(const SymbolicAlgebra& s) {
  std::size_t bees = 0;
  for (const Term& t : s.terms()) {
    if (std::holds_alternative<NSucc>(t.descriptor)) return false;
    if (std::holds_alternative<Bee>(t.descriptor)) ++bees;
  }
  return bees <= 1 && profiles_uniform(s);
}

bool is_homogeneous(const SymbolicAlgebra& s) { return profiles_uniform(s); }

bool is_transitive(const SymbolicAlgebra& s) {
  if (!s.families().empty() || s.terms().size() != 1) return false;
  const Descriptor& d = s.terms().front().descriptor;
  return std::holds_alternative<Bee>(d) || is_pure_cycle(d);
}

bool is_partially_homogeneous(const SymbolicAlgebra& s) {
  if (!s.families().empty()) return false;
  const auto& terms = s.terms();
  auto only = [&](auto pred) { return std::all_of(terms.begin(), terms.end(), pred); };
  auto cycles_of = [&](std::uint64_t other) {
    return only([&](const Term& t) { return is_cycle(t.descriptor, 1) || is_cycle(t.descriptor, other); });
  };
  if (cycles_of(2) || cycles_of(3)) return true;
  if (only([](const Term& t) {
        return is_cycle(t.descriptor, 1) || (is_cycle(t.descriptor, 4) && t.multiplicity == Cardinal(1));
      })) {
    return true;
  }
  const Profile pointed_pair{1, {Cardinal(1)}, std::nullopt};
  if (only([&](const Term& t) { return t.descriptor == Descriptor(pointed_pair); })) return true;
  if (terms.size() == 1 && terms.front().multiplicity == Cardinal(1)) {
    const auto* p = std::get_if<Profile>(&terms.front().descriptor);
    return p != nullptr && p->cycle == 1 && !p->tail && p->prefix.size() <= 1;
  }
  return false;
}

bool matches_homogeneous_categorical_shape(const SymbolicAlgebra& s) {
  if (!s.families().empty()) return false;
  std::set<std::uint64_t> sizes;
  for (const Term& t : s.terms()) {
    const auto* p = std::get_if<Profile>(&t.descriptor);
    if (p == nullptr || p->tail || !sizes.insert(p->cycle).second) return false;
  }
  return true;
}

SymbolicAlgebra fraisse_limit(LimitKind kind, std::uint64_t k) {
  const Cardinal w = Cardinal::omega();
  if (kind == LimitKind::kAll) return SymbolicAlgebra({}, {CycleFamily{w, {}, w}});
  if (k == 0) throw InvalidInput("F_k needs k >= 1");
  // With k = 1 the first level would be 0, leaving bare cycles.
  if (k == 1) return SymbolicAlgebra({}, {CycleFamily{w, {}, std::nullopt}});
  return SymbolicAlgebra({}, {CycleFamily{w, {Cardinal(k - 1)}, Cardinal(k)}});
}

FiniteMonounary instantiate(const SymbolicAlgebra& s, std::uint64_t omega_value, std::uint64_t max_size) {
  if (omega_value == 0) throw InvalidInput("omega value must be at least 1");
  if (!s.families().empty()) throw InvalidInput("cannot instantiate infinitely many components");
  for (const Term& t : s.terms()) {
    const auto* p = std::get_if<Profile>(&t.descriptor);
    if (p == nullptr) throw InvalidInput("cannot instantiate " + to_string(t.descriptor) + ": not locally finite");
    if (p->tail) throw InvalidInput("cannot instantiate " + to_string(t.descriptor) + ": infinite height");
  }

  auto too_big = [&] {
    return BoundExceeded("instance exceeds " + std::to_string(max_size) + " elements");
  };
  // Count first so that nothing large is allocated before the bound check.
  std::uint64_t total = 0;
  for (const Term& t : s.terms()) {
    const auto& p = std::get<Profile>(t.descriptor);
    std::uint64_t layer = p.cycle;
    std::uint64_t size = layer;
    for (Cardinal a : p.prefix) {
      const std::uint64_t k = a.resolve(omega_value);
      if (layer > max_size / k) throw too_big();
      layer *= k;
      size += layer;
      if (size > max_size) throw too_big();
    }
    const std::uint64_t copies = t.multiplicity.resolve(omega_value);
    if (size > (max_size - total) / copies) throw too_big();
    total += size * copies;
  }

  std::vector<Element> table;
  table.reserve(total);
  for (const Term& t : s.terms()) {
    const auto& p = std::get<Profile>(t.descriptor);
    const std::uint64_t copies = t.multiplicity.resolve(omega_value);
    for (std::uint64_t c = 0; c < copies; ++c) {
      const auto base = static_cast<Element>(table.size());
      const auto n = static_cast<Element>(p.cycle);
      for (Element i = 0; i < n; ++i) table.push_back(base + (i + 1) % n);
      std::size_t lo = static_cast<std::size_t>(base);
      std::size_t hi = table.size();
      for (Cardinal a : p.prefix) {
        const std::uint64_t k = a.resolve(omega_value);
        for (std::size_t x = lo; x < hi; ++x) {
          for (std::uint64_t j = 0; j < k; ++j) table.push_back(static_cast<Element>(x));
        }
        lo = hi;
        hi = table.size();
      }
    }
  }
  return FiniteMonounary(std::move(table));
}

SymbolicAlgebra truncate(const SymbolicAlgebra& s, std::uint64_t h) {
  std::vector<Term> terms;
  for (const Term& t : s.terms()) {
    const auto* p = std::get_if<Profile>(&t.descriptor);
    if (p == nullptr) throw InvalidInput("cannot truncate " + to_string(t.descriptor) + ": no cycle");
    terms.push_back(Term{t.multiplicity, Profile{p->cycle, cut(p->prefix, p->tail, h), std::nullopt}});
  }
  std::vector<CycleFamily> families;
  for (const CycleFamily& f : s.families()) {
    families.push_back(CycleFamily{f.multiplicity, cut(f.prefix, f.tail, h), std::nullopt});
  }
  return SymbolicAlgebra(std::move(terms), std::move(families));
}

SymbolicAlgebra materialize(const SymbolicAlgebra& s, std::uint64_t max_cycle) {
  std::vector<Term> terms = s.terms();
  for (const CycleFamily& f : s.families()) {
    for (std::uint64_t n = 1; n <= max_cycle; ++n) terms.push_back(Term{f.multiplicity, f.member(n)});
  }
  return SymbolicAlgebra(std::move(terms));
}

SymbolicAlgebra decompose(const FiniteMonounary& algebra) {
  const detail::Skeleton sk = detail::skeleton(algebra.table());

  // Elements of each height, grouped by the cycle size of their component.
  std::map<std::uint64_t, std::vector<std::vector<Element>>> levels;
  std::map<std::uint64_t, std::uint64_t> copies;
  for (const auto& cycle : sk.cycles) ++copies[cycle.size()];
  for (Element x : sk.by_height) {
    const auto xu = static_cast<std::size_t>(x);
    auto& by_level = levels[sk.cycles[sk.component[xu]].size()];
    if (by_level.size() <= sk.height[xu]) by_level.resize(sk.height[xu] + 1);
    by_level[sk.height[xu]].push_back(x);
  }

  std::vector<Term> terms;
  for (const auto& [n, by_level] : levels) {
    std::vector<Cardinal> prefix;
    for (std::size_t h = 0; h < by_level.size(); ++h) {
      const std::size_t count = sk.children[static_cast<std::size_t>(by_level[h].front())].size();
      for (Element x : by_level[h]) {
        if (sk.children[static_cast<std::size_t>(x)].size() != count) {
          throw NotUltrahomogeneous("not ultrahomogeneous: non-uniform preimage counts at cycle size " +
                                    std::to_string(n) + ", height " + std::to_string(h));
        }
      }
      if (count == 0) break;
      prefix.push_back(Cardinal(count));
    }
    terms.push_back(Term{Cardinal(copies[n]), Profile{n, std::move(prefix), std::nullopt}});
  }
  return SymbolicAlgebra(std::move(terms));
}

}  // namespace monoalg
