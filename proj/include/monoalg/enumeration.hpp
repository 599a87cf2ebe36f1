#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "monoalg/core.hpp"

namespace monoalg {

inline constexpr std::size_t kMaxEnumerationSize = 7;

// One representative per isomorphism class of endofunctions on n points: the
// lexicographically least table of the class. Representatives are sorted.
struct Corpus {
  std::size_t n = 0;
  std::vector<FiniteMonounary> representatives;
};

// Buckets all n^n tables by certificate. `threads` = 0 picks the hardware
// concurrency. Throws InvalidInput unless 1 <= n <= kMaxEnumerationSize.
Corpus enumerate_up_to_iso(std::size_t n, unsigned threads = 0);

// Class counts for n = 1, ..., up_to.
std::vector<std::size_t> counts(std::size_t up_to, unsigned threads = 0);

// Uniform over the n^n raw tables; identical for identical (n, seed).
FiniteMonounary random_algebra(std::size_t n, std::uint64_t seed);

// Header "# n=<n> count=<k>" followed by one space-separated table per line.
void write_corpus(std::ostream& out, const Corpus& corpus);

// Accepts the format above; blank lines and other '#' lines are ignored.
// Every table is validated, and all must share one size.
Corpus read_corpus(std::istream& in);

}  // namespace monoalg
