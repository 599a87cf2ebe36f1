#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monoalg/core.hpp"
#include "monoalg/limits.hpp"

namespace monoalg {

// Elements of equal height in components of equal cycle size have equal
// preimage counts, and components of equal cycle size are isomorphic.
bool is_ultrahomogeneous(const FiniteMonounary& algebra);

// Every isomorphism between subalgebras of equal size extends to an
// automorphism. Throws BoundExceeded when |A| > bound.
bool is_ultrahomogeneous_oracle(const FiniteMonounary& algebra, std::size_t bound = kDefaultOracleBound);

// The same, restricted to subalgebras generated by one element.
bool is_1_ultrahomogeneous_oracle(const FiniteMonounary& algebra, std::size_t bound = kDefaultOracleBound);

// Isomorphisms between subalgebras with exactly n elements extend.
bool is_n_homogeneous(const FiniteMonounary& algebra, std::size_t n, std::size_t bound = kDefaultOracleBound);

// Isomorphisms between induced partial structures on n-element subsets extend.
bool is_partially_n_homogeneous(const FiniteMonounary& algebra, std::size_t n,
                                std::size_t bound = kDefaultOracleBound);

// Partially n-homogeneous for every n <= |A|.
bool is_partially_homogeneous_oracle(const FiniteMonounary& algebra, std::size_t bound = kDefaultOracleBound);

// Which shape a partially homogeneous algebra has.
enum class PartialPattern {
  kFixedPointsAndTwoCycles,    // α·Z1 + β·Z2
  kFixedPointsAndThreeCycles,  // α·Z1 + β·Z3
  kFixedPointsAndOneFourCycle, // α·Z1 + Z4
  kPointedPairs,               // α·A[1;1]
  kStar,                       // A[1;α]
};

std::string to_string(PartialPattern pattern);

// The first matching shape, trying them in declaration order; cardinals may be 0.
std::optional<PartialPattern> partial_pattern(const FiniteMonounary& algebra);

bool is_partially_homogeneous(const FiniteMonounary& algebra);

struct LatticeReport {
  bool transitive = false;
  bool partially_1_homogeneous = false;
  bool partially_2_homogeneous = false;
  bool partially_homogeneous = false;
  bool ultrahomogeneous = false;
  // Finite algebras have no elements of infinite height, so homogeneity
  // coincides with ultrahomogeneity.
  bool homogeneous = false;
  bool homogeneous_2 = false;
  bool homogeneous_1 = false;

  // Containments of the lattice that this report breaks, by name.
  std::vector<std::string> violations() const;
};

struct LatticeEdge {
  std::string name;
  bool (*holds)(const LatticeReport&);
};

// The eight containments T ⊆ PH ⊆ PH1, PH2 ⊆ UH ⊆ H ⊆ H2 ⊆ H1 (edge by edge),
// followed by PH1 ∩ PH2 ⊆ PH.
const std::vector<LatticeEdge>& lattice_edges();

// Oracles for the partial and n-homogeneity classes, fast deciders for the rest.
LatticeReport classify_lattice(const FiniteMonounary& algebra, std::size_t bound = kDefaultOracleBound);

// For a loop-free partial algebra (a directed pseudoforest): is it isomorphic to
// α·Z2, α·Z3, Z4, or the empty relation on its points? Throws InvalidInput on a loop.
bool pseudoforest_ultrahomogeneous(const PartialMonounary& algebra);

// Digraph oracle over the edge relation: every isomorphism between induced
// subdigraphs extends to a digraph automorphism.
bool digraph_ultrahomogeneous_oracle(const PartialMonounary& algebra, std::size_t bound = kDefaultOracleBound);

struct MultiunaryVerdict {
  bool one_ultrahomogeneous = false;
  bool ultrahomogeneous = false;
};

// Brute force on an algebra with several total operations of equal length.
MultiunaryVerdict multiunary_brute_check(const std::vector<std::vector<Element>>& tables,
                                         std::size_t bound = kDefaultOracleBound);

}  // namespace monoalg
