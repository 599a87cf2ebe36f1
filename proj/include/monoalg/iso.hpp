#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monoalg/core.hpp"
#include "monoalg/limits.hpp"

namespace monoalg {

// Exact isomorphism invariant: the algebra relabeled into canonical order,
// together with the labels carried along by the relabeling. Two (labeled)
// algebras are isomorphic exactly when their certificates are equal.
struct Certificate {
  std::vector<Element> table;
  std::vector<std::int64_t> labels;

  auto operator<=>(const Certificate&) const = default;
  std::string to_string() const;
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept;
};

Certificate canonical_certificate(const FiniteMonounary& algebra);

// Certificate of (A, labels): isomorphisms must carry label i to label i.
// `labels` has one entry per element.
Certificate labeled_certificate(const FiniteMonounary& algebra, std::span<const std::int64_t> labels);

// (component of x, x) with x distinguished.
Certificate pointed_certificate(const FiniteMonounary& algebra, Element x);

// (A, x_1, ..., x_k) with ordered markers; repeated coordinates allowed.
// Throws InvalidInput for k > 62.
Certificate marked_certificate(const FiniteMonounary& algebra, std::span<const Element> tuple);

// The relabeling behind canonical_certificate(): position i of the canonical
// table is element sequence[i] of the input.
std::vector<Element> canonical_sequence(const FiniteMonounary& algebra);

bool are_isomorphic(const FiniteMonounary& a, const FiniteMonounary& b);

// |Aut(A)|, saturating at UINT64_MAX.
std::uint64_t automorphism_count(const FiniteMonounary& algebra);

// Aut(A) assembled from component permutations, cycle rotations and tree
// automorphisms; sorted lexicographically. Throws BoundExceeded when |Aut(A)|
// exceeds `cap`.
std::vector<Permutation> enumerate_automorphisms(const FiniteMonounary& algebra,
                                                 std::uint64_t cap = kDefaultAutomorphismCap);

// Filters all n! permutations. Throws BoundExceeded when n > bound.
std::vector<Permutation> brute_force_automorphisms(const FiniteMonounary& algebra,
                                                   std::size_t bound = kDefaultOracleBound);

using PartialMap = std::vector<std::pair<Element, Element>>;

// Some automorphism agreeing with `partial`, or nullopt if none exists.
// Throws InvalidInput if `partial` is not an injective function.
std::optional<Permutation> extend_to_automorphism(const FiniteMonounary& algebra,
                                                  const PartialMap& partial);

// Some isomorphism A -> B agreeing with `partial`, as an image table.
std::optional<std::vector<Element>> extend_to_isomorphism(const FiniteMonounary& a,
                                                          const FiniteMonounary& b,
                                                          const PartialMap& partial);

// Every isomorphism A -> B as an image table, sorted. Throws BoundExceeded if
// there are more than `cap`.
std::vector<std::vector<Element>> all_isomorphisms(const FiniteMonounary& a,
                                                   const FiniteMonounary& b,
                                                   std::uint64_t cap = kDefaultAutomorphismCap);

// A bijection ⟨S⟩ -> ⟨T⟩: domain[i] is sent to image[i].
struct SubalgebraIsomorphism {
  std::vector<Element> domain;
  std::vector<Element> image;

  auto operator<=>(const SubalgebraIsomorphism&) const = default;
};

// All isomorphisms ⟨S⟩ -> ⟨T⟩ (S need not go to T). Throws BoundExceeded if
// |⟨S⟩| > bound.
std::vector<SubalgebraIsomorphism> isomorphisms_between(const FiniteMonounary& algebra,
                                                        std::span<const Element> s,
                                                        std::span<const Element> t,
                                                        std::size_t bound = kDefaultOracleBound);

// Checks π∘θ = θ∘π for a bijection π.
bool is_automorphism(const FiniteMonounary& algebra, const Permutation& pi);

}  // namespace monoalg
