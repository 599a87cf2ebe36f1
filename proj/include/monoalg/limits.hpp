#pragma once

#include <cstddef>
#include <cstdint>

namespace monoalg {

// Largest algebra the brute-force oracles accept unless overridden.
inline constexpr std::size_t kDefaultOracleBound = 8;

// Largest automorphism list enumerate_automorphisms() will materialize.
inline constexpr std::uint64_t kDefaultAutomorphismCap = 1'000'000;

// Largest tuple space n_orbit_count_bruteforce() will walk.
inline constexpr std::uint64_t kDefaultTupleBound = 1'000'000;

// Largest table instantiate() will build.
inline constexpr std::uint64_t kDefaultInstanceBound = 10'000'000;

// MONOALG_BOUND if set to a positive integer, kDefaultOracleBound otherwise.
std::size_t oracle_bound_from_env();

}  // namespace monoalg
