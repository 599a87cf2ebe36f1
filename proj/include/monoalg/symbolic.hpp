#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monoalg/core.hpp"
#include "monoalg/limits.hpp"

namespace monoalg {

// A natural number or ω. Sums and products saturate at ω (with 0·ω = 0);
// finite overflow throws InvalidInput.
class Cardinal {
 public:
  constexpr Cardinal() = default;
  // Implicit so that natural numbers can be written where cardinals are expected.
  constexpr Cardinal(std::uint64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr Cardinal omega() {
    Cardinal c;
    c.omega_ = true;
    return c;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr bool is_finite() const { return !omega_; }
  constexpr bool is_zero() const { return !omega_ && value_ == 0; }
  // Throws InvalidInput for ω.
  std::uint64_t value() const;

  // Replaces ω by `omega_value`.
  std::uint64_t resolve(std::uint64_t omega_value) const { return omega_ ? omega_value : value_; }

  friend Cardinal operator+(Cardinal a, Cardinal b);
  friend Cardinal operator*(Cardinal a, Cardinal b);

  // Finite values in numeric order, all below ω.
  auto operator<=>(const Cardinal&) const = default;

  std::string to_string() const;

 private:
  // Declaration order makes the defaulted comparison put every finite value
  // below ω.
  bool omega_ = false;
  std::uint64_t value_ = 0;
};

// A[cycle; prefix..., then tail forever]. With no tail the levels beyond the
// prefix are empty. Z_n is Profile{n, {}, nullopt}.
struct Profile {
  std::uint64_t cycle = 1;
  std::vector<Cardinal> prefix;
  std::optional<Cardinal> tail;

  auto operator<=>(const Profile&) const = default;
};

// B_α: the connected cycle-free algebra with α preimages everywhere.
struct Bee {
  Cardinal degree;

  auto operator<=>(const Bee&) const = default;
};

// (ℕ; suc).
struct NSucc {
  auto operator<=>(const NSucc&) const = default;
};

using Descriptor = std::variant<Profile, Bee, NSucc>;

// Throws InvalidInput on a zero cycle size or a zero cardinal, then strips
// trailing prefix entries equal to the tail.
Descriptor normalize(Descriptor d);

// Equality of normal forms.
bool descriptors_isomorphic(const Descriptor& a, const Descriptor& b);

std::string to_string(const Descriptor& d);

struct Term {
  Cardinal multiplicity;
  Descriptor descriptor;

  auto operator<=>(const Term&) const = default;
};

// Σ_{n ≥ 1} multiplicity · member(n), where member(n) is A[n; prefix; tail].
// An empty prefix without tail gives Σ multiplicity · Z_n.
struct CycleFamily {
  Cardinal multiplicity;
  std::vector<Cardinal> prefix;
  std::optional<Cardinal> tail;

  Profile member(std::uint64_t n) const;

  auto operator<=>(const CycleFamily&) const = default;
};

// A countable algebra as a finite multiset of components plus families that
// contribute one component type per cycle size. Kept normalized: descriptors
// in normal form, equal descriptors merged, terms and families sorted.
class SymbolicAlgebra {
 public:
  SymbolicAlgebra() = default;
  SymbolicAlgebra(std::vector<Term> terms, std::vector<CycleFamily> families = {});

  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<CycleFamily>& families() const { return families_; }
  bool empty() const { return terms_.empty() && families_.empty(); }

  auto operator<=>(const SymbolicAlgebra&) const = default;

 private:
  std::vector<Term> terms_;
  std::vector<CycleFamily> families_;
};

// sum  := term ("+" term)*
// term := [card "*"] comp | "sum_n" [card "*"] family | "F" | "F_" nat
// comp := "Z" nat | "N" | "B[" card "]" | "A[" nat [";" cardlist] [";" card] "]"
// family := "Z_n" | "A[n" [";" cardlist] [";" card] "]"
// card := nat | "w"
// Whitespace is insignificant. Throws InvalidInput with the offending offset.
SymbolicAlgebra parse_symbolic(std::string_view text);

// Normalized, deterministic; parse_symbolic(to_string(s)) == s.
std::string to_string(const SymbolicAlgebra& s);

// Height of a descriptor: |prefix| for a tail-free profile, ω otherwise.
Cardinal height(const Descriptor& d);

bool is_locally_finite(const SymbolicAlgebra& s);
bool is_ulf(const SymbolicAlgebra& s);
Cardinal o1(const SymbolicAlgebra& s);
bool is_omega_categorical(const SymbolicAlgebra& s);
bool is_ultrahomogeneous(const SymbolicAlgebra& s);
bool is_homogeneous(const SymbolicAlgebra& s);
bool is_transitive(const SymbolicAlgebra& s);
bool is_partially_homogeneous(const SymbolicAlgebra& s);

// Σ β_i · A[n_i; α_0, ..., α_h] with distinct n_i, no tails, no acyclic
// components and no families: the ω-categorical ultrahomogeneous shape.
bool matches_homogeneous_categorical_shape(const SymbolicAlgebra& s);

enum class LimitKind { kAll, kBounded };

// 𝔽 (kind kAll) or 𝔽_k (kind kBounded, k >= 1). Throws InvalidInput for k = 0.
SymbolicAlgebra fraisse_limit(LimitKind kind, std::uint64_t k = 0);

// Builds the table, reading ω as `omega_value`. Components follow term order;
// each is laid out as its cycle (i -> i+1 mod n) followed by its levels.
// Throws InvalidInput for acyclic components, tails or families, and
// BoundExceeded beyond `max_size` elements.
FiniteMonounary instantiate(const SymbolicAlgebra& s, std::uint64_t omega_value,
                            std::uint64_t max_size = kDefaultInstanceBound);

// Cuts every profile (and every family) to at most h levels. Throws
// InvalidInput for acyclic components.
SymbolicAlgebra truncate(const SymbolicAlgebra& s, std::uint64_t h);

// Replaces each family by its members with cycle size <= max_cycle.
SymbolicAlgebra materialize(const SymbolicAlgebra& s, std::uint64_t max_cycle);

// Normal form of a finite ultrahomogeneous algebra. Throws NotUltrahomogeneous
// naming the first (cycle size, height) level with non-uniform preimage counts.
SymbolicAlgebra decompose(const FiniteMonounary& algebra);

}  // namespace monoalg
