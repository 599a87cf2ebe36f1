#include "monoalg/enumeration.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "monoalg/error.hpp"
#include "monoalg/iso.hpp"

namespace monoalg {

namespace {

using Buckets = std::unordered_map<Certificate, std::uint64_t, CertificateHash>;

std::uint64_t power(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  return total;
}

// Table number `index` in lexicographic order: entry 0 is the most
// significant base-n digit.
std::vector<Element> table_at(std::size_t n, std::uint64_t index) {
  std::vector<Element> table(n);
  for (std::size_t i = n; i-- > 0;) {
    table[i] = static_cast<Element>(index % n);
    index /= n;
  }
  return table;
}

// Scans [begin, end) in increasing order, so the first index recorded for a
// certificate is the least one in the range.
Buckets scan(std::size_t n, std::uint64_t begin, std::uint64_t end) {
  Buckets buckets;
  std::vector<Element> table = table_at(n, begin);
  for (std::uint64_t index = begin; index < end; ++index) {
    buckets.try_emplace(canonical_certificate(FiniteMonounary(table)), index);
    for (std::size_t i = n; i-- > 0;) {
      if (++table[i] < static_cast<Element>(n)) break;
      table[i] = 0;
    }
  }
  return buckets;
}

}  // namespace

Corpus enumerate_up_to_iso(std::size_t n, unsigned threads) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw InvalidInput("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationSize) +
                       ", got " + std::to_string(n));
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t total = power(n);
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<Buckets> parts(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = total * t / threads;
    const std::uint64_t end = total * (t + 1) / threads;
    workers.emplace_back([&parts, t, n, begin, end] { parts[t] = scan(n, begin, end); });
  }
  for (auto& w : workers) w.join();

  Buckets merged = std::move(parts.front());
  for (unsigned t = 1; t < threads; ++t) {
    for (const auto& [cert, index] : parts[t]) {
      auto [it, fresh] = merged.try_emplace(cert, index);
      if (!fresh) it->second = std::min(it->second, index);
    }
  }

  std::vector<std::uint64_t> indices;
  indices.reserve(merged.size());
  for (const auto& entry : merged) indices.push_back(entry.second);
  std::sort(indices.begin(), indices.end());

  Corpus corpus{n, {}};
  corpus.representatives.reserve(indices.size());
  for (std::uint64_t index : indices) corpus.representatives.emplace_back(table_at(n, index));
  return corpus;
}

std::vector<std::size_t> counts(std::size_t up_to, unsigned threads) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= up_to; ++n) out.push_back(enumerate_up_to_iso(n, threads).representatives.size());
  return out;
}

FiniteMonounary random_algebra(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("random_algebra needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<Element> table(n);
  for (auto& entry : table) entry = pick(rng);
  return FiniteMonounary(std::move(table));
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  out << "# n=" << corpus.n << " count=" << corpus.representatives.size() << '\n';
  for (const auto& algebra : corpus.representatives) {
    for (std::size_t i = 0; i < algebra.size(); ++i) out << (i ? " " : "") << algebra.table()[i];
    out << '\n';
  }
}

Corpus read_corpus(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::int64_t> raw;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        raw.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw InvalidInput("corpus line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
      }
    }
    FiniteMonounary algebra = FiniteMonounary::validate(raw);
    if (corpus.n != 0 && algebra.size() != corpus.n) {
      throw InvalidInput("corpus line " + std::to_string(line_no) + " has " + std::to_string(algebra.size()) +
                         " entries, expected " + std::to_string(corpus.n));
    }
    corpus.n = algebra.size();
    corpus.representatives.push_back(std::move(algebra));
  }
  if (corpus.representatives.empty()) throw InvalidInput("corpus contains no tables");
  return corpus;
}

}  // namespace monoalg
