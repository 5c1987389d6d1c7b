#include "osx/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace osx {

std::vector<NbcPrimeEntry> nbc_prime(const Matroid& m) {
  const int l = m.rank();
  std::vector<NbcPrimeEntry> out;
  if (l < 1) return out;
  const auto& bases = m.nbc_sets(l);
  for (std::uint32_t s : m.nbc_sets(l - 1)) {
    NbcPrimeEntry e;
    e.s_set = s;
    for (std::uint32_t t : bases)
      if ((t & s) == s) e.n_of_s.push_back(std::countr_zero(t & ~s) + 1);
    if (e.n_of_s.size() < 2) continue;
    std::sort(e.n_of_s.begin(), e.n_of_s.end());
    e.i_of_s = e.n_of_s.front();
    out.push_back(std::move(e));
  }
  return out;
}

bool is_neat(const Matroid& m, const std::vector<int>& u) {
  return phi(m, flagify(m, u)) == u;
}

std::vector<int> inserted_tuple(std::uint32_t s_set, int a, int k) {
  std::vector<int> s = indices_of(s_set);
  if (k < 1 || k > static_cast<int>(s.size()) + 1)
    throw std::invalid_argument("inserted_tuple: bad position");
  std::vector<int> out(s.begin(), s.begin() + (k - 1));
  out.push_back(a);
  out.insert(out.end(), s.begin() + (k - 1), s.end());
  return out;
}

bool is_early(std::uint32_t s_set, int a, int k) {
  std::vector<int> s = indices_of(s_set);
  return k == 1 || s[k - 2] < a;
}

int GammaTree::find_vertex(int a, int k) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].a == a && vertices[i].k == k) return static_cast<int>(i);
  return -1;
}

namespace {

// X^k = cl({s_k, ..., s_{l-1}}), the closure of the suffix of S from position
// k on (1-based; k = l gives the empty suffix).
std::uint32_t suffix_flat(const Matroid& m, const std::vector<int>& s, int k) {
  std::uint32_t mask = 0;
  for (std::size_t i = k - 1; i < s.size(); ++i) mask |= 1u << (s[i] - 1);
  return m.closure(mask);
}

}  // namespace

GammaTree gamma_tree(const Matroid& m, std::uint32_t s_set) {
  const int l = m.rank();
  std::vector<NbcPrimeEntry> prime = nbc_prime(m);
  const NbcPrimeEntry* entry = nullptr;
  for (const auto& e : prime)
    if (e.s_set == s_set) entry = &e;
  if (!entry) throw std::invalid_argument("gamma_tree: set is not in nbc'");

  GammaTree tree;
  tree.s_set = s_set;
  std::vector<int> s = indices_of(s_set);
  for (int a : entry->n_of_s)
    for (int k = 1; k <= l; ++k) {
      if (!is_early(s_set, a, k)) continue;
      std::vector<int> tuple = inserted_tuple(s_set, a, k);
      if (!is_neat(m, tuple)) continue;
      GammaVertex v;
      v.a = a;
      v.k = k;
      v.tuple = tuple;
      v.standard = std::is_sorted(tuple.begin(), tuple.end());
      tree.vertices.push_back(std::move(v));
    }

  tree.children.assign(tree.vertices.size(), {});
  for (std::size_t i = 0; i < tree.vertices.size(); ++i)
    for (std::size_t j = 0; j < tree.vertices.size(); ++j) {
      const GammaVertex& p = tree.vertices[i];
      const GammaVertex& c = tree.vertices[j];
      if (c.k != p.k + 1) continue;
      std::uint32_t xk = suffix_flat(m, s, p.k);
      if (m.closure(xk | (1u << (p.a - 1))) == m.closure(xk | (1u << (c.a - 1)))) {
        tree.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        tree.children[i].push_back(static_cast<int>(j));
      }
    }

  tree.root = tree.find_vertex(entry->i_of_s, 1);

  // The proposition promises a tree rooted at S(i(S),1) whose leaves are the
  // standard bases; fail loudly if the construction breaks that.
  if (tree.root < 0) throw std::logic_error("gamma_tree: missing root");
  if (tree.edges.size() + 1 != tree.vertices.size())
    throw std::logic_error("gamma_tree: edge count does not match a tree");
  std::vector<char> seen(tree.vertices.size(), 0);
  std::vector<int> stack = {tree.root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (seen[v]) throw std::logic_error("gamma_tree: cycle detected");
    seen[v] = 1;
    for (int c : tree.children[v]) stack.push_back(c);
  }
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    if (!seen[i]) throw std::logic_error("gamma_tree: disconnected vertex");
    bool leaf = tree.children[i].empty();
    if (leaf != tree.vertices[i].standard)
      throw std::logic_error("gamma_tree: leaves are not exactly the standard bases");
  }
  return tree;
}

SmallTree t_tree(const Matroid& m, std::uint32_t s_set) {
  GammaTree g = gamma_tree(m, s_set);
  SmallTree t;
  t.s_set = s_set;
  for (const auto& e : nbc_prime(m))
    if (e.s_set == s_set) t.vertices = e.n_of_s;
  for (auto [i, j] : g.edges) {
    int a = g.vertices[i].a, b = g.vertices[j].a;
    if (a == b) continue;
    auto edge = std::minmax(a, b);
    std::pair<int, int> pr{edge.first, edge.second};
    if (std::find(t.edges.begin(), t.edges.end(), pr) == t.edges.end()) t.edges.push_back(pr);
  }
  std::sort(t.edges.begin(), t.edges.end());
  if (t.edges.size() + 1 != t.vertices.size())
    throw std::logic_error("t_tree: edge count does not match a tree on N(S)");
  return t;
}

SmallTree t_tree_algorithmic(const Matroid& m, std::uint32_t s_set) {
  std::vector<NbcPrimeEntry> prime = nbc_prime(m);
  const NbcPrimeEntry* entry = nullptr;
  for (const auto& e : prime)
    if (e.s_set == s_set) entry = &e;
  if (!entry) throw std::invalid_argument("t_tree_algorithmic: set is not in nbc'");

  SmallTree t;
  t.s_set = s_set;
  t.vertices = entry->n_of_s;
  std::vector<int> s = indices_of(s_set);
  for (int b : entry->n_of_s) {
    if (b == entry->i_of_s) continue;
    // Standard position of b, then shift left while the tuple stays neat.
    int r = 1;
    while (r <= static_cast<int>(s.size()) && s[r - 1] < b) ++r;
    int k = r;
    while (k > 1 && is_neat(m, inserted_tuple(s_set, b, k - 1))) --k;
    if (k == 1) throw std::logic_error("t_tree_algorithmic: descent reached the root");
    std::vector<int> broken = inserted_tuple(s_set, b, k - 1);
    std::vector<int> neat = phi(m, flagify(m, broken));
    // neat must be S(a, k-1) for a smaller a in N(S).
    std::vector<int> expected_tail(s.begin() + (k - 2), s.end());
    std::vector<int> head(neat.begin(), neat.begin() + (k - 2));
    std::vector<int> s_head(s.begin(), s.begin() + (k - 2));
    int a = neat[k - 2];
    std::vector<int> tail(neat.begin() + (k - 1), neat.end());
    if (head != s_head || tail != expected_tail || a >= b)
      throw std::logic_error("t_tree_algorithmic: unexpected reading of the broken tuple");
    auto edge = std::minmax(a, b);
    std::pair<int, int> pr{edge.first, edge.second};
    if (std::find(t.edges.begin(), t.edges.end(), pr) == t.edges.end()) t.edges.push_back(pr);
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

std::map<std::uint32_t, int> expand_to_standard(const Matroid& m, const GammaTree& tree,
                                                int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(tree.vertices.size()))
    throw std::invalid_argument("expand_to_standard: bad vertex");
  std::map<std::uint32_t, int> out;
  const int k0 = tree.vertices[vertex].k;
  std::vector<int> stack = {vertex};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const GammaVertex& gv = tree.vertices[v];
    if (gv.standard) {
      int sign = ((gv.k - k0) & 1) ? -1 : 1;
      out[mask_of(gv.tuple)] = sign;
    }
    for (int c : tree.children[v]) stack.push_back(c);
  }
  // Verify against the direct computation.
  ExtElement direct = z_of_flag(m, flagify(m, tree.vertices[vertex].tuple)).value;
  ExtElement sum;
  for (const auto& [t, sign] : out)
    sum += z_of_flag(m, flagify(m, indices_of(t))).value * Rat(sign);
  if (sum != direct) throw std::logic_error("expand_to_standard: expansion mismatch");
  return out;
}

std::map<std::uint32_t, int> expand_to_standard(const Matroid& m, std::uint32_t s_set, int a,
                                                int k) {
  GammaTree tree = gamma_tree(m, s_set);
  int v = tree.find_vertex(a, k);
  if (v < 0) throw std::invalid_argument("expand_to_standard: S(a,k) is not a vertex of Gamma(S)");
  return expand_to_standard(m, tree, v);
}

ExtElement evaluate_relation(const Matroid& m, const Relation& r) {
  ExtElement sum;
  for (const auto& [t, coeff] : r.coeffs)
    sum += wedge(coeff, z_of_flag(m, flagify(m, indices_of(t))).value);
  return sum;
}

namespace {

// The close flags of a Gamma edge differ in exactly one flat; read off the
// data of the pair relation there.
Relation close_flag_relation(const Matroid& m, const GammaTree& tree, int parent, int child) {
  Flag f = flagify(m, tree.vertices[parent].tuple);
  Flag fp = flagify(m, tree.vertices[child].tuple);
  int diff = -1;
  for (int i = 1; i < m.rank(); ++i)
    if (f.flats[i] != fp.flats[i]) {
      if (diff >= 0) throw std::logic_error("close flags differ in more than one flat");
      diff = i;
    }
  if (diff < 0) throw std::logic_error("flags of a Gamma edge coincide");
  auto mins = [&](const Flag& fl) {
    int a = std::countr_zero(fl.flats[diff] & ~fl.flats[diff - 1]) + 1;
    int b = std::countr_zero(fl.flats[diff + 1] & ~fl.flats[diff]) + 1;
    return std::pair<int, int>{a, b};
  };
  auto [a, b] = mins(f);
  auto [ap, bp] = mins(fp);
  int exponent = std::popcount(f.flats[diff]) - std::popcount(fp.flats[diff]);
  int sign = (exponent & 1) ? -1 : 1;

  ExtElement ca = ExtElement::generator(a) - ExtElement::generator(b);
  ExtElement cb = (ExtElement::generator(ap) - ExtElement::generator(bp)) * Rat(-sign);

  Relation rel;
  rel.kind = Relation::Kind::first;
  rel.provenance = "t(" + set_str(tree.s_set) + ") edge " +
                   std::to_string(std::min(tree.vertices[parent].a, tree.vertices[child].a)) +
                   "-" +
                   std::to_string(std::max(tree.vertices[parent].a, tree.vertices[child].a));
  for (const auto& [t, s] : expand_to_standard(m, tree, parent)) {
    ExtElement add = ca * Rat(s);
    auto it = rel.coeffs.find(t);
    if (it == rel.coeffs.end())
      rel.coeffs[t] = add;
    else
      it->second += add;
  }
  for (const auto& [t, s] : expand_to_standard(m, tree, child)) {
    ExtElement add = cb * Rat(s);
    auto it = rel.coeffs.find(t);
    if (it == rel.coeffs.end())
      rel.coeffs[t] = add;
    else
      it->second += add;
  }
  for (auto it = rel.coeffs.begin(); it != rel.coeffs.end();)
    it = it->second.is_zero() ? rel.coeffs.erase(it) : std::next(it);
  return rel;
}

}  // namespace

std::vector<Relation> relations_first_kind(const Matroid& m) {
  std::vector<Relation> out;
  for (const auto& entry : nbc_prime(m)) {
    GammaTree tree = gamma_tree(m, entry.s_set);
    std::vector<std::pair<int, int>> used;  // t(S) edges already emitted
    for (auto [i, j] : tree.edges) {
      int a = tree.vertices[i].a, b = tree.vertices[j].a;
      if (a == b) continue;
      auto mm = std::minmax(a, b);
      std::pair<int, int> key{mm.first, mm.second};
      if (std::find(used.begin(), used.end(), key) != used.end()) continue;
      used.push_back(key);
      out.push_back(close_flag_relation(m, tree, i, j));
    }
  }
  return out;
}

std::vector<Relation> relations_second_kind(const Matroid& m) {
  std::vector<Relation> out;
  for (std::uint32_t t : m.nbc_sets(m.rank())) {
    Flag f = flagify(m, indices_of(t));
    for (std::uint32_t part : partition_of_flag(f)) {
      int nu = std::countr_zero(part) + 1;
      for (int j : indices_of(part)) {
        if (j == nu) continue;
        Relation rel;
        rel.kind = Relation::Kind::second;
        rel.provenance = "T=" + set_str(t) + " j=" + std::to_string(j);
        rel.coeffs[t] = ExtElement::generator(j) - ExtElement::generator(nu);
        out.push_back(std::move(rel));
      }
    }
  }
  return out;
}

bool flag_relation_check(const Matroid& m, const Flag& f, int i) {
  if (i <= 0 || i >= m.rank()) throw std::invalid_argument("flag_relation_check: bad rank index");
  ExtElement sum;
  for (std::uint32_t y : m.flats_between(f.flats[i - 1], f.flats[i + 1])) {
    Flag g = f;
    g.flats[i] = y;
    sum += z_of_flag(m, g).value;
  }
  return sum.is_zero();
}

RelationBasisReport verify_relation_basis(const Matroid& m) {
  RelationBasisReport rep;
  const int n = m.n();
  const int l = m.rank();
  const auto& bases = m.nbc_sets(l);
  const int nb = static_cast<int>(bases.size());
  std::map<std::uint32_t, int> base_index;
  for (int i = 0; i < nb; ++i) base_index[bases[i]] = i;

  // mu sends the tuple (a_T) of linear forms to sum a_T z(T); its matrix rows
  // are indexed by the pairs (T, generator).
  std::vector<ExtElement> domain, images;
  for (int bi = 0; bi < nb; ++bi) {
    ExtElement z = z_of_flag(m, flagify(m, indices_of(bases[bi]))).value;
    for (int i = 1; i <= n; ++i) {
      domain.push_back(ExtElement::generator(i));
      images.push_back(wedge(ExtElement::generator(i), z));
    }
  }
  KernelResult ker = kernel_of_map(n, n - l + 1, domain, images);
  rep.kernel_dim = static_cast<int>(ker.coeffs.size());

  std::vector<Relation> first = relations_first_kind(m);
  std::vector<Relation> second = relations_second_kind(m);
  rep.first_kind = static_cast<int>(first.size());
  rep.second_kind = static_cast<int>(second.size());

  rep.all_vanish = true;
  RatMatrix rel_rows;
  auto to_coeff_row = [&](const Relation& r) {
    RatRow row(static_cast<std::size_t>(nb) * n, Rat(0));
    for (const auto& [t, form] : r.coeffs) {
      int bi = base_index.at(t);
      for (const auto& [mono, c] : form.terms())
        row[static_cast<std::size_t>(bi) * n + (std::countr_zero(mono.bits))] = c;
    }
    return row;
  };
  for (const auto& rels : {first, second})
    for (const Relation& r : rels) {
      if (!evaluate_relation(m, r).is_zero()) rep.all_vanish = false;
      rel_rows.push_back(to_coeff_row(r));
    }

  int rank = static_cast<int>(rref(rel_rows).rows.size());
  rep.independent = (rank == rep.first_kind + rep.second_kind);
  rep.spans = (rank == rep.kernel_dim);
  return rep;
}

std::vector<MonomialRelation> relations_first_kind_monomial(const Matroid& m) {
  const int n = m.n();
  std::vector<MonomialRelation> out;
  auto eps = [](std::uint32_t set, int i) {
    return std::popcount(set & ((1u << (i - 1)) - 1));
  };
  for (const auto& entry : nbc_prime(m)) {
    std::uint32_t comp_s = full_mask(n) & ~entry.s_set;
    for (int i : entry.n_of_s) {
      if (i == entry.i_of_s) continue;
      MonomialRelation r;
      r.s_set = entry.s_set;
      r.i = i;
      auto term = [&](int j) {
        std::uint32_t bar = comp_s & ~(1u << (j - 1));
        int sign = (eps(comp_s, j) & 1) ? -1 : 1;
        return ExtElement::monomial(Monomial(bar), Rat(sign));
      };
      r.lhs = wedge(ExtElement::generator(i), term(i)) -
              wedge(ExtElement::generator(entry.i_of_s), term(entry.i_of_s));
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace osx
