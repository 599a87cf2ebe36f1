#include "canonical.hpp"

#include <algorithm>
#include <numeric>

namespace monoalg::detail {

namespace {

// Start of the lexicographically least rotation; the smallest such index when
// the sequence is periodic.
std::size_t least_rotation(const std::vector<std::uint32_t>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const auto a = s[(i + k) % n];
    const auto b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::size_t smallest_period(const std::vector<std::uint32_t>& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t q = 1, k = 0; q < n; ++q) {
    while (k > 0 && s[q] != s[k]) k = fail[k - 1];
    if (s[q] == s[k]) ++k;
    fail[q] = k;
  }
  const std::size_t p = n - fail[n - 1];
  return n % p == 0 ? p : n;
}

}  // namespace

CanonicalForm canonical_form(std::span<const Element> table, std::span<const std::int64_t> labels) {
  const std::size_t n = table.size();
  CanonicalForm f;
  f.skel = skeleton(table);
  const Skeleton& s = f.skel;
  f.rank.assign(n, 0);
  f.kids.assign(n, {});

  // Bucket elements by height, then rank the deepest level first so that a
  // node's key only refers to already-ranked children.
  std::size_t max_height = 0;
  for (std::size_t h : s.height) max_height = std::max(max_height, h);
  std::vector<std::vector<Element>> level(max_height + 1);
  for (Element x : s.by_height) level[s.height[static_cast<std::size_t>(x)]].push_back(x);

  std::vector<std::vector<std::int64_t>> key(n);
  for (std::size_t h = max_height + 1; h-- > 0;) {
    auto& nodes = level[h];
    for (Element x : nodes) {
      const auto xu = static_cast<std::size_t>(x);
      auto& kids = f.kids[xu];
      kids = s.children[xu];
      std::stable_sort(kids.begin(), kids.end(), [&](Element a, Element b) {
        return f.rank[static_cast<std::size_t>(a)] < f.rank[static_cast<std::size_t>(b)];
      });
      auto& k = key[xu];
      k.reserve(kids.size() + 1);
      k.push_back(labels.empty() ? 0 : labels[xu]);
      for (Element c : kids) k.push_back(f.rank[static_cast<std::size_t>(c)]);
    }
    std::vector<Element> sorted = nodes;
    std::sort(sorted.begin(), sorted.end(), [&](Element a, Element b) {
      return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
    });
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const auto xu = static_cast<std::size_t>(sorted[i]);
      if (i > 0 && key[static_cast<std::size_t>(sorted[i - 1])] != key[xu]) ++r;
      f.rank[xu] = r;
    }
    // Children keys are no longer needed once their parents are ranked.
    if (h + 1 <= max_height) {
      for (Element x : level[h + 1]) std::vector<std::int64_t>().swap(key[static_cast<std::size_t>(x)]);
    }
  }

  const std::size_t m = s.cycles.size();
  f.cycle_pos.assign(n, 0);
  f.code.resize(m);
  f.start.resize(m);
  f.period.resize(m);
  for (std::size_t id = 0; id < m; ++id) {
    const auto& cycle = s.cycles[id];
    std::vector<std::uint32_t> raw(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      f.cycle_pos[static_cast<std::size_t>(cycle[i])] = i;
      raw[i] = f.rank[static_cast<std::size_t>(cycle[i])];
    }
    const std::size_t st = least_rotation(raw);
    f.start[id] = st;
    f.code[id].resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) f.code[id][i] = raw[(st + i) % raw.size()];
    f.period[id] = smallest_period(f.code[id]);
  }

  f.order.resize(m);
  std::iota(f.order.begin(), f.order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    if (f.code[a].size() != f.code[b].size()) return f.code[a].size() < f.code[b].size();
    return f.code[a] < f.code[b];
  };
  std::stable_sort(f.order.begin(), f.order.end(), less);
  f.klass.assign(m, 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && less(f.order[i - 1], f.order[i])) ++k;
    f.klass[f.order[i]] = k;
  }
  return f;
}

std::vector<Element> canonical_sequence(const CanonicalForm& form) {
  std::vector<Element> out;
  out.reserve(form.rank.size());
  for (std::size_t id : form.order) {
    const auto& cycle = form.skel.cycles[id];
    const std::size_t begin = out.size();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out.push_back(cycle[(form.start[id] + i) % cycle.size()]);
    }
    for (std::size_t head = begin; head < out.size(); ++head) {
      const auto& kids = form.kids[static_cast<std::size_t>(out[head])];
      out.insert(out.end(), kids.begin(), kids.end());
    }
  }
  return out;
}

std::vector<std::size_t> matching_shifts(const CanonicalForm& form, std::size_t from,
                                         std::size_t to) {
  // Both codes are least rotations, so they are either equal (and every
  // multiple of the period lines them up) or no shift works.
  std::vector<std::size_t> out;
  if (form.code[from] != form.code[to]) return out;
  const std::size_t len = form.code[from].size();
  const std::size_t a = form.start[from];
  const std::size_t b = form.start[to];
  for (std::size_t p = 0; p < len; p += form.period[from]) {
    // Position i of `from` (raw) corresponds to position (i - a) of the code,
    // which sits at raw position (i - a + b + p) of `to`.
    out.push_back((b + p + len - a) % len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monoalg::detail
