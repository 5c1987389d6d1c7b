#include "osx/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace osx {

namespace {

struct MaskDeglexLess {
  bool operator()(std::uint32_t a, std::uint32_t b) const {
    return deglex_less(Monomial(a), Monomial(b));
  }
};

}  // namespace

Matroid Matroid::from_circuits(int n, const std::vector<std::vector<int>>& circuits) {
  if (n < 1 || n > 16) throw std::invalid_argument("ground set size must be in 1..16");
  Matroid m;
  m.n_ = n;
  for (const auto& c : circuits) {
    std::uint32_t mask = mask_of(c);
    if (mask & ~full_mask(n)) throw std::invalid_argument("circuit point outside 1..n");
    if (std::popcount(mask) != static_cast<int>(c.size()))
      throw std::invalid_argument("repeated point in circuit");
    if (std::popcount(mask) <= 2)
      throw std::invalid_argument("circuit of size <= 2: matroid is not simple");
    m.circuits_.push_back(mask);
  }
  std::sort(m.circuits_.begin(), m.circuits_.end(), MaskDeglexLess{});
  m.circuits_.erase(std::unique(m.circuits_.begin(), m.circuits_.end()), m.circuits_.end());
  for (std::uint32_t a : m.circuits_)
    for (std::uint32_t b : m.circuits_)
      if (a != b && (a & b) == a) throw std::invalid_argument("nested circuits");
  m.finish_construction();
  return m;
}

Matroid Matroid::from_lines(int n, const std::vector<std::vector<int>>& lines) {
  if (n < 1 || n > 16) throw std::invalid_argument("ground set size must be in 1..16");
  std::vector<std::uint32_t> masks;
  for (const auto& l : lines) {
    std::uint32_t mask = mask_of(l);
    if (mask & ~full_mask(n)) throw std::invalid_argument("line point outside 1..n");
    if (std::popcount(mask) < 3) throw std::invalid_argument("line with fewer than 3 points");
    masks.push_back(mask);
  }
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (std::popcount(masks[i] & masks[j]) > 1)
        throw std::invalid_argument("two lines sharing two points");

  std::vector<std::vector<int>> circuits;
  // All collinear triples.
  for (std::uint32_t l : masks) {
    std::vector<int> pts = indices_of(l);
    int k = static_cast<int>(pts.size());
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (int c = b + 1; c < k; ++c) circuits.push_back({pts[a], pts[b], pts[c]});
  }
  // All 4-subsets containing no collinear triple.
  std::uint32_t all = full_mask(n);
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (std::popcount(s) != 4) continue;
    bool has_triple = false;
    for (std::uint32_t l : masks)
      if (std::popcount(s & l) >= 3) {
        has_triple = true;
        break;
      }
    if (!has_triple) circuits.push_back(indices_of(s));
  }
  return from_circuits(n, circuits);
}

void Matroid::finish_construction() {
  rank_ = rank_of(full_mask(n_));
  for (std::uint32_t c : circuits_) {
    std::uint32_t bc = c & (c - 1);  // drop the smallest element
    broken_circuits_.push_back(bc);
  }
  std::sort(broken_circuits_.begin(), broken_circuits_.end(), MaskDeglexLess{});
  broken_circuits_.erase(std::unique(broken_circuits_.begin(), broken_circuits_.end()),
                         broken_circuits_.end());

  nbc_.assign(rank_ + 1, {});
  std::uint32_t all = full_mask(n_);
  for (std::uint32_t s = 0; s <= all; ++s) {
    int p = std::popcount(s);
    if (p > rank_) continue;
    bool ok = true;
    for (std::uint32_t bc : broken_circuits_)
      if ((s & bc) == bc) {
        ok = false;
        break;
      }
    if (ok) nbc_[p].push_back(s);
  }
  for (auto& level : nbc_) std::sort(level.begin(), level.end(), MaskDeglexLess{});
}

bool Matroid::is_independent(std::uint32_t s) const {
  for (std::uint32_t c : circuits_)
    if ((s & c) == c) return false;
  return true;
}

int Matroid::rank_of(std::uint32_t s) const {
  std::uint32_t acc = 0;
  int r = 0;
  for (std::uint32_t m = s; m; m &= m - 1) {
    std::uint32_t bit = m & -m;
    if (is_independent(acc | bit)) {
      acc |= bit;
      ++r;
    }
  }
  return r;
}

std::uint32_t Matroid::closure(std::uint32_t s) const {
  int r = rank_of(s);
  std::uint32_t cl = s;
  std::uint32_t rest = full_mask(n_) & ~s;
  for (std::uint32_t m = rest; m; m &= m - 1) {
    std::uint32_t bit = m & -m;
    if (rank_of(s | bit) == r) cl |= bit;
  }
  return cl;
}

const std::vector<std::uint32_t>& Matroid::nbc_sets(int p) const {
  static const std::vector<std::uint32_t> kEmpty;
  if (p < 0 || p > rank_) return kEmpty;
  return nbc_[p];
}

bool Matroid::is_nbc(std::uint32_t t) const {
  std::vector<int> pts = indices_of(t);
  std::uint32_t suffix = 0;
  for (int r = static_cast<int>(pts.size()) - 1; r >= 0; --r) {
    suffix |= 1u << (pts[r] - 1);
    std::uint32_t cl = closure(suffix);
    if (std::countr_zero(cl) + 1 != pts[r]) return false;
  }
  return true;
}

std::vector<std::uint32_t> Matroid::lines() const {
  std::vector<std::uint32_t> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      std::uint32_t pair = (1u << (i - 1)) | (1u << (j - 1));
      std::uint32_t cl = closure(pair);
      if (std::popcount(cl) >= 3 && rank_of(cl) == 2) out.push_back(cl);
    }
  std::sort(out.begin(), out.end(), MaskDeglexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> Matroid::flats_between(std::uint32_t x, std::uint32_t z) const {
  if (!is_flat(x) || !is_flat(z) || (x & ~z))
    throw std::invalid_argument("flats_between requires flats X < Z");
  if (rank_of(z) != rank_of(x) + 2) throw std::invalid_argument("flats_between requires rank gap 2");
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = z & ~x; m; m &= m - 1) {
    std::uint32_t bit = m & -m;
    out.push_back(closure(x | bit));
  }
  std::sort(out.begin(), out.end(), MaskDeglexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Flag> Matroid::maximal_flags() const {
  std::vector<Flag> out;
  Flag cur;
  cur.flats.push_back(0);
  // Depth-first over covers: the flats of rank i+1 over X are the closures of
  // its one-point extensions.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == rank_) {
      out.push_back(cur);
      return;
    }
    std::uint32_t x = cur.flats.back();
    std::vector<std::uint32_t> covers;
    for (std::uint32_t m = full_mask(n_) & ~x; m; m &= m - 1) {
      std::uint32_t bit = m & -m;
      covers.push_back(closure(x | bit));
    }
    std::sort(covers.begin(), covers.end(), MaskDeglexLess{});
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    for (std::uint32_t y : covers) {
      cur.flats.push_back(y);
      self(self, depth + 1);
      cur.flats.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void Matroid::validate_circuit_axioms() const {
  // Circuit elimination: for distinct circuits C1, C2 and e in their
  // intersection, (C1 u C2) - e contains a circuit.
  for (std::uint32_t c1 : circuits_)
    for (std::uint32_t c2 : circuits_) {
      if (c1 == c2) continue;
      for (std::uint32_t m = c1 & c2; m; m &= m - 1) {
        std::uint32_t e = m & -m;
        std::uint32_t u = (c1 | c2) & ~e;
        if (is_independent(u))
          throw std::invalid_argument("circuit elimination fails for " + set_str(c1) + ", " +
                                      set_str(c2) + " at point " +
                                      std::to_string(std::countr_zero(e) + 1));
      }
    }
}

Flag flagify(const Matroid& m, const std::vector<int>& ordered) {
  std::uint32_t set = mask_of(ordered);
  if (std::popcount(set) != static_cast<int>(ordered.size()))
    throw std::invalid_argument("flagify: repeated point");
  if (!m.is_independent(set)) throw std::invalid_argument("flagify: dependent input");
  Flag f;
  f.flats.push_back(0);
  std::uint32_t suffix = 0;
  for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
    suffix |= 1u << (*it - 1);
    f.flats.push_back(m.closure(suffix));
  }
  return f;
}

std::vector<int> phi(const Matroid& m, const Flag& f) {
  (void)m;
  int k = f.length();
  std::vector<int> out(k);
  for (int p = 1; p <= k; ++p) {
    std::uint32_t diff = f.flats[p] & ~f.flats[p - 1];
    out[k - p] = std::countr_zero(diff) + 1;
  }
  return out;
}

std::vector<std::uint32_t> partition_of_flag(const Flag& f) {
  std::vector<std::uint32_t> parts;
  for (int i = 1; i <= f.length(); ++i) parts.push_back(f.flats[i] & ~f.flats[i - 1]);
  return parts;
}

}  // namespace osx
