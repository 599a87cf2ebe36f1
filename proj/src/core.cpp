#include "monoalg/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "monoalg/error.hpp"
#include "skeleton.hpp"

namespace monoalg {

namespace {

void check_range(std::size_t n, std::int64_t value, std::size_t index) {
  if (value < 0 || static_cast<std::uint64_t>(value) >= n) {
    throw InvalidInput("entry " + std::to_string(index) + " = " + std::to_string(value) +
                       " is out of range for n = " + std::to_string(n));
  }
}

void check_size(std::size_t n) {
  if (n == 0) throw InvalidInput("empty table: an algebra needs at least one element");
  if (n > static_cast<std::size_t>(std::numeric_limits<Element>::max())) {
    throw InvalidInput("table too large");
  }
}

std::vector<Element> normalized_subset(std::size_t n, std::span<const Element> subset) {
  std::vector<Element> out(subset.begin(), subset.end());
  for (Element x : out) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) {
      throw InvalidInput("element " + std::to_string(x) + " is not in the algebra");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

FiniteMonounary::FiniteMonounary(std::vector<Element> table) : table_(std::move(table)) {
  check_size(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) check_range(table_.size(), table_[i], i);
}

FiniteMonounary FiniteMonounary::validate(std::span<const std::int64_t> raw) {
  check_size(raw.size());
  std::vector<Element> table(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    check_range(raw.size(), raw[i], i);
    table[i] = static_cast<Element>(raw[i]);
  }
  return FiniteMonounary(std::move(table));
}

PartialMonounary::PartialMonounary(std::vector<std::optional<Element>> table)
    : table_(std::move(table)) {
  check_size(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i]) check_range(table_.size(), *table_[i], i);
  }
}

PartialMonounary::PartialMonounary(const FiniteMonounary& total)
    : table_(total.table().begin(), total.table().end()) {}

std::vector<Element> PartialMonounary::domain() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

bool PartialMonounary::is_total() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& e) { return e.has_value(); });
}

bool PartialMonounary::has_loop() const {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] && static_cast<std::size_t>(*table_[i]) == i) return true;
  }
  return false;
}

FiniteMonounary PartialMonounary::to_total() const {
  std::vector<Element> table;
  table.reserve(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (!table_[i]) throw InvalidInput("entry " + std::to_string(i) + " is undefined");
    table.push_back(*table_[i]);
  }
  return FiniteMonounary(std::move(table));
}

std::vector<Element> MinimalGeneratingSets::first() const {
  std::vector<Element> out = leaves;
  for (const auto& choices : cyclic_choices) out.push_back(choices.front());
  std::sort(out.begin(), out.end());
  return out;
}

StructureReport structure_report(const FiniteMonounary& algebra) {
  const std::size_t n = algebra.size();
  const detail::Skeleton s = detail::skeleton(algebra.table());

  StructureReport report;
  report.heights = s.height;
  report.height = *std::max_element(s.height.begin(), s.height.end());

  std::vector<std::vector<Element>> members(s.cycles.size());
  for (std::size_t x = 0; x < n; ++x) members[s.component[x]].push_back(static_cast<Element>(x));
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return members[a].front() < members[b].front(); });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  report.component_of.resize(n);
  report.cycle_size_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    report.component_of[x] = rank[s.component[x]];
    report.cycle_size_of[x] = s.cycles[s.component[x]].size();
    if (s.cyclic[x]) report.cyclic.push_back(static_cast<Element>(x));
  }
  for (std::size_t id : order) {
    report.components.push_back(members[id]);
    report.cycle_sizes.push_back(s.cycles[id].size());
    if (members[id].size() == s.cycles[id].size()) {
      report.min_generating_sets.cyclic_choices.push_back(members[id]);
    }
  }
  std::sort(report.cycle_sizes.begin(), report.cycle_sizes.end());

  std::vector<char> hit(n, 0);
  for (Element y : algebra.table()) hit[static_cast<std::size_t>(y)] = 1;
  for (std::size_t x = 0; x < n; ++x) {
    if (!hit[x]) report.leaves.push_back(static_cast<Element>(x));
  }
  report.min_generating_sets.leaves = report.leaves;
  return report;
}

std::vector<Element> generated(const FiniteMonounary& algebra, std::span<const Element> seeds) {
  if (seeds.empty()) throw InvalidInput("generating set must be nonempty");
  const std::vector<Element> start = normalized_subset(algebra.size(), seeds);
  std::vector<char> in(algebra.size(), 0);
  std::vector<Element> out;
  for (Element x : start) {
    while (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      out.push_back(x);
      x = algebra(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedPartial induced_partial(const FiniteMonounary& algebra, std::span<const Element> subset) {
  std::vector<Element> elements = normalized_subset(algebra.size(), subset);
  if (elements.empty()) throw InvalidInput("subset must be nonempty");
  std::vector<std::optional<Element>> table(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Element image = algebra(elements[i]);
    auto it = std::lower_bound(elements.begin(), elements.end(), image);
    if (it != elements.end() && *it == image) {
      table[i] = static_cast<Element>(it - elements.begin());
    }
  }
  return {std::move(elements), PartialMonounary(std::move(table))};
}

InducedPartial upper_set(const FiniteMonounary& algebra, Element z) {
  if (!algebra.contains(z)) throw InvalidInput("element " + std::to_string(z) + " is not in the algebra");
  const detail::Skeleton s = detail::skeleton(algebra.table());
  std::vector<Element> members{z};
  for (std::size_t head = 0; head < members.size(); ++head) {
    const auto& kids = s.children[static_cast<std::size_t>(members[head])];
    members.insert(members.end(), kids.begin(), kids.end());
  }
  return induced_partial(algebra, members);
}

Subalgebra generated_subalgebra(const FiniteMonounary& algebra, std::span<const Element> seeds) {
  std::vector<Element> elements = generated(algebra, seeds);
  std::vector<Element> table(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Element image = algebra(elements[i]);
    table[i] = static_cast<Element>(std::lower_bound(elements.begin(), elements.end(), image) -
                                    elements.begin());
  }
  return {std::move(elements), FiniteMonounary(std::move(table))};
}

std::vector<Edge> relational_form(const FiniteMonounary& algebra) {
  std::vector<Edge> edges;
  edges.reserve(algebra.size());
  for (std::size_t x = 0; x < algebra.size(); ++x) {
    edges.emplace_back(static_cast<Element>(x), algebra.table()[x]);
  }
  return edges;
}

std::vector<Edge> relational_form(const PartialMonounary& algebra) {
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < algebra.size(); ++x) {
    if (const auto& image = algebra.table()[x]) edges.emplace_back(static_cast<Element>(x), *image);
  }
  return edges;
}

}  // namespace monoalg
