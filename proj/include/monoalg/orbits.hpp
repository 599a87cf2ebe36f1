#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "monoalg/core.hpp"
#include "monoalg/iso.hpp"
#include "monoalg/limits.hpp"

namespace monoalg {

// Orbit index of every element; orbits are numbered by least member.
std::vector<std::size_t> one_orbit_ids(const FiniteMonounary& algebra);

// Aut(A)-orbits on A, each ascending, ordered by least member.
std::vector<std::vector<Element>> one_orbits(const FiniteMonounary& algebra);

bool is_transitive(const FiniteMonounary& algebra);

// Labels tuples so that two tuples of equal length share a label exactly when
// some automorphism maps one onto the other. The label of (x_1, ..., x_n) is
// built from the label of (x_1, ..., x_{n-1}), the 1-orbit of x_n, and the
// isomorphism type of ⟨x_1, ..., x_n⟩ with x_i marked as coordinate i.
//
// Not safe for concurrent use: labels are interned in a per-instance table.
class OrbitLabeler {
 public:
  explicit OrbitLabeler(FiniteMonounary algebra);

  // Throws InvalidInput for an empty tuple, an out-of-range element, or more
  // than 62 coordinates.
  std::size_t label(std::span<const Element> tuple);

  // Label of `tuple` when the label of its first n-1 coordinates is already
  // known. Use kEmptyPrefix for 1-tuples. No argument checking.
  std::size_t extend(std::size_t prefix_label, std::span<const Element> tuple);

  static constexpr std::size_t kEmptyPrefix = static_cast<std::size_t>(-1);

  const FiniteMonounary& algebra() const { return algebra_; }

 private:

  FiniteMonounary algebra_;
  std::vector<std::size_t> one_orbit_;
  std::map<std::tuple<std::size_t, std::size_t, Certificate>, std::size_t> interned_;
};

// Number of orbits of Aut(A) acting coordinatewise on A^arity.
std::uint64_t n_orbit_count(const FiniteMonounary& algebra, std::size_t arity);

// [o_1, ..., o_k].
std::vector<std::uint64_t> orbit_profile(const FiniteMonounary& algebra, std::size_t k);

// Union-find over A^arity under the brute-force automorphism list. Throws
// BoundExceeded when |A|^arity > tuple_bound or |A| > oracle_bound.
std::uint64_t n_orbit_count_bruteforce(const FiniteMonounary& algebra, std::size_t arity,
                                       std::uint64_t tuple_bound = kDefaultTupleBound,
                                       std::size_t oracle_bound = kDefaultOracleBound);

}  // namespace monoalg
