#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace monoalg {

using Element = std::int32_t;

// Images of 0, ..., n-1 in order.
using Permutation = std::vector<Element>;

using Edge = std::pair<Element, Element>;

// A total unary operation on {0, ..., n-1}.
class FiniteMonounary {
 public:
  // Throws InvalidInput if the table is empty or has an entry outside [0, n).
  explicit FiniteMonounary(std::vector<Element> table);

  // Same checks as the constructor, from an unchecked integer sequence.
  static FiniteMonounary validate(std::span<const std::int64_t> raw);

  std::size_t size() const { return table_.size(); }
  Element operator()(Element x) const { return table_[static_cast<std::size_t>(x)]; }
  const std::vector<Element>& table() const { return table_; }

  bool contains(Element x) const {
    return x >= 0 && static_cast<std::size_t>(x) < table_.size();
  }

  auto operator<=>(const FiniteMonounary&) const = default;

 private:
  std::vector<Element> table_;
};

// A unary operation defined on a subset of {0, ..., n-1}.
class PartialMonounary {
 public:
  // Throws InvalidInput if the table is empty or a defined entry is out of range.
  explicit PartialMonounary(std::vector<std::optional<Element>> table);
  explicit PartialMonounary(const FiniteMonounary& total);

  std::size_t size() const { return table_.size(); }
  const std::vector<std::optional<Element>>& table() const { return table_; }

  std::optional<Element> operator()(Element x) const {
    return table_[static_cast<std::size_t>(x)];
  }
  bool defined(Element x) const { return table_[static_cast<std::size_t>(x)].has_value(); }

  // dom(θ), ascending.
  std::vector<Element> domain() const;
  bool is_total() const;
  bool has_loop() const;

  // Throws InvalidInput unless is_total().
  FiniteMonounary to_total() const;

  auto operator<=>(const PartialMonounary&) const = default;

 private:
  std::vector<std::optional<Element>> table_;
};

// Leaves belong to every minimal generating set; each purely cyclic component
// contributes exactly one element of its choice set.
struct MinimalGeneratingSets {
  std::vector<Element> leaves;
  std::vector<std::vector<Element>> cyclic_choices;

  // L ∪ K with the least element picked from every choice set.
  std::vector<Element> first() const;
};

struct StructureReport {
  // Components sorted by least element, members ascending.
  std::vector<std::vector<Element>> components;
  std::vector<std::size_t> component_of;
  std::vector<Element> cyclic;
  std::vector<std::size_t> heights;
  std::size_t height = 0;
  std::vector<Element> leaves;
  // |cyc(B)| for every component B, ascending (a multiset).
  std::vector<std::size_t> cycle_sizes;
  // |cyc(B)| of the component containing each element.
  std::vector<std::size_t> cycle_size_of;
  MinimalGeneratingSets min_generating_sets;

  bool is_cyclic(Element x) const { return heights[static_cast<std::size_t>(x)] == 0; }
};

StructureReport structure_report(const FiniteMonounary& algebra);

// ⟨S⟩, ascending. Throws InvalidInput on an empty or out-of-range seed set.
std::vector<Element> generated(const FiniteMonounary& algebra, std::span<const Element> seeds);

// A subset of an algebra with its induced partial structure. Index i of
// `algebra` stands for elements[i].
struct InducedPartial {
  std::vector<Element> elements;
  PartialMonounary algebra;
};

// dom(θ_B) = {b ∈ B : θ(b) ∈ B}. The subset is sorted and deduplicated.
InducedPartial induced_partial(const FiniteMonounary& algebra, std::span<const Element> subset);

// A_z: z together with the acyclic elements whose forward orbit reaches z
// before touching a cycle.
InducedPartial upper_set(const FiniteMonounary& algebra, Element z);

// ⟨S⟩ relabeled onto {0, ..., |⟨S⟩|-1}; index i stands for elements[i].
struct Subalgebra {
  std::vector<Element> elements;
  FiniteMonounary algebra;
};

Subalgebra generated_subalgebra(const FiniteMonounary& algebra, std::span<const Element> seeds);

// One (x, θ(x)) edge per defined entry, ordered by x.
std::vector<Edge> relational_form(const FiniteMonounary& algebra);
std::vector<Edge> relational_form(const PartialMonounary& algebra);

}  // namespace monoalg
