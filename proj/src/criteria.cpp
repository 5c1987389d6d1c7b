#include "osx/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace osx {

std::uint32_t line_closure(const Matroid& m, std::uint32_t s) {
  std::uint32_t cur = s;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t c : m.circuits()) {
      if (std::popcount(c) != 3) continue;
      if (std::popcount(c & cur) >= 2 && (c & ~cur)) {
        cur |= c;
        grew = true;
      }
    }
  }
  return cur;
}

CriterionReport is_line_closed(const Matroid& m) {
  if (m.n() > 12) throw std::invalid_argument("is_line_closed: n > 12");
  CriterionReport rep;
  rep.verdict = true;
  long long lcl_sets = 0;
  for (std::uint32_t s = 0; s <= full_mask(m.n()); ++s) {
    if (line_closure(m, s) != s) continue;
    ++lcl_sets;
    if (!m.is_flat(s)) {
      rep.verdict = false;
      rep.witness_set = s;
      break;
    }
  }
  rep.details["lcl_sets_scanned"] = lcl_sets;

  if (m.rank() == 3) {
    bool shortcut = true;
    for (std::uint32_t s = 0; s <= full_mask(m.n()); ++s)
      if (m.rank_of(s) == 3 && line_closure(m, s) != m.ground_set()) {
        shortcut = false;
        break;
      }
    if (shortcut != rep.verdict)
      throw std::logic_error("rank-3 line-closure shortcut disagrees with the definition");
    rep.details["rank3_shortcut"] = shortcut ? 1 : 0;
  }
  return rep;
}

namespace {

void check_partition(const Matroid& m, const std::vector<std::uint32_t>& parts) {
  std::uint32_t seen = 0;
  for (std::uint32_t p : parts) {
    if (!p) throw std::invalid_argument("empty part");
    if (seen & p) throw std::invalid_argument("overlapping parts");
    seen |= p;
  }
  if (seen != m.ground_set()) throw std::invalid_argument("parts must cover 1..n");
}

}  // namespace

bool is_partition_p_independent(const Matroid& m, const std::vector<std::uint32_t>& parts, int p) {
  check_partition(m, parts);
  for (std::uint32_t c : m.circuits()) {
    if (std::popcount(c) > p) continue;
    bool doubled = false;
    for (std::uint32_t part : parts)
      if (std::popcount(c & part) >= 2) {
        doubled = true;
        break;
      }
    if (!doubled) return false;
  }
  return true;
}

bool is_partition_p_independent_transversal(const Matroid& m,
                                            const std::vector<std::uint32_t>& parts, int p) {
  check_partition(m, parts);
  // All ways to pick one point from each of at most p distinct parts.
  int k = static_cast<int>(parts.size());
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int from, std::uint32_t acc) -> bool {
    if (!m.is_independent(acc)) return false;
    if (static_cast<int>(chosen.size()) == p) return true;
    for (int i = from; i < k; ++i)
      for (int pt : indices_of(parts[i])) {
        chosen.push_back(pt);
        bool ok = self(self, i + 1, acc | (1u << (pt - 1)));
        chosen.pop_back();
        if (!ok) return false;
      }
    return true;
  };
  return rec(rec, 0, 0);
}

bool is_partition_independent(const Matroid& m, const std::vector<std::uint32_t>& parts) {
  return is_partition_p_independent(m, parts, m.rank() + 1);
}

void for_each_partition(int n, const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
  // Restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
  std::vector<int> a(n, 0);
  std::vector<std::uint32_t> parts;
  auto rec = [&](auto&& self, int i, int maxl) -> bool {
    if (i == n) {
      parts.assign(maxl + 1, 0);
      for (int j = 0; j < n; ++j) parts[a[j]] |= 1u << j;
      return fn(parts);
    }
    for (int l = 0; l <= maxl + 1; ++l) {
      a[i] = l;
      if (!self(self, i + 1, std::max(maxl, l))) return false;
    }
    return true;
  };
  if (n == 0) return;
  a[0] = 0;
  rec(rec, 1, 0);
}

CriterionReport is_p_independent_matroid(const Matroid& m, int p) {
  if (m.n() > 12) throw std::invalid_argument("is_p_independent_matroid: n > 12");
  if (p < 3 || p > m.rank() + 1)
    throw std::invalid_argument("is_p_independent_matroid: p must be in 3..rank+1");
  CriterionReport rep;
  rep.verdict = true;
  long long scanned = 0;
  for_each_partition(m.n(), [&](const std::vector<std::uint32_t>& parts) {
    ++scanned;
    if (is_partition_p_independent(m, parts, p) && !is_partition_independent(m, parts)) {
      rep.verdict = false;
      rep.witness_partition = parts;
      return false;
    }
    return true;
  });
  rep.details["partitions_scanned"] = scanned;
  return rep;
}

int component_count(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n + 1);
  for (int i = 0; i <= n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (auto [u, v] : edges) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --comps;
    }
  }
  return comps;
}

GraphCheckReport graph_component_check(const Matroid& m) {
  if (m.rank() != 3 && m.rank() != 2)
    throw std::invalid_argument("graph_component_check requires rank 2 or 3");
  GraphCheckReport rep;
  std::vector<std::vector<std::pair<int, int>>> line_edges;
  for (std::uint32_t line : m.lines()) {
    std::vector<int> pts = indices_of(line);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b) edges.emplace_back(pts[a], pts[b]);
    line_edges.push_back(std::move(edges));
  }

  long long total = 1;
  const long long cap = 10'000'000;
  for (const auto& e : line_edges) {
    total *= static_cast<long long>(e.size());
    if (total > cap) break;
  }
  if (total > cap) {
    // Too many assignments; fall back to the partition decider.
    rep.exhaustive = false;
    rep.three_independent = is_p_independent_matroid(m, 3).verdict;
    return rep;
  }

  std::vector<std::pair<int, int>> chosen(line_edges.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == line_edges.size()) {
      ++rep.assignments;
      std::vector<std::pair<int, int>> edges(chosen.begin(), chosen.end());
      rep.max_components = std::max(rep.max_components, component_count(m.n(), edges));
      return;
    }
    for (const auto& e : line_edges[i]) {
      chosen[i] = e;
      self(self, i + 1);
    }
  };
  if (line_edges.empty()) {
    rep.assignments = 1;
    rep.max_components = m.n();
  } else {
    rec(rec, 0);
  }
  rep.three_independent = rep.max_components <= 3;
  return rep;
}

}  // namespace osx
