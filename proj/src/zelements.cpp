#include "osx/zelements.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace osx {

int shuffle_sign(const std::vector<std::uint32_t>& parts) {
  std::vector<int> word;
  for (std::uint32_t p : parts)
    for (int i : indices_of(p)) word.push_back(i);
  int inv = 0;
  for (std::size_t a = 0; a < word.size(); ++a)
    for (std::size_t b = a + 1; b < word.size(); ++b)
      if (word[a] > word[b]) ++inv;
  return (inv & 1) ? -1 : 1;
}

ZElement z_of_partition(int n, const std::vector<std::uint32_t>& parts) {
  std::uint32_t seen = 0;
  for (std::uint32_t p : parts) {
    if (p == 0) throw std::invalid_argument("z_of_partition: empty part");
    if (seen & p) throw std::invalid_argument("z_of_partition: overlapping parts");
    seen |= p;
  }
  if (seen != full_mask(n)) throw std::invalid_argument("z_of_partition: parts must cover 1..n");
  ZElement z;
  z.parts = parts;
  z.shuffle_sign = shuffle_sign(parts);
  ExtElement v = ExtElement::one();
  for (std::uint32_t p : parts) v = wedge(v, boundary(Monomial(p)));
  v *= Rat(z.shuffle_sign);
  z.value = std::move(v);
  return z;
}

ZElement z_of_flag(const Matroid& m, const Flag& f) {
  if (f.length() != m.rank() || f.top() != m.ground_set())
    throw std::invalid_argument("z_of_flag requires a maximal flag");
  return z_of_partition(m.n(), partition_of_flag(f));
}

ZElement z_of_nbc(const Matroid& m, std::uint32_t t) {
  if (!m.is_nbc(t)) throw std::invalid_argument("z_of_nbc: set is not nbc");
  Flag f = flagify(m, indices_of(t));
  std::vector<std::uint32_t> parts = partition_of_flag(f);
  std::uint32_t rest = m.ground_set() & ~f.top();

  ZElement z;
  z.parts = parts;
  std::vector<std::uint32_t> word_parts = parts;
  if (rest) word_parts.push_back(rest);
  z.shuffle_sign = shuffle_sign(word_parts);
  ExtElement v = ExtElement::one();
  for (std::uint32_t p : parts) v = wedge(v, boundary(Monomial(p)));
  v = wedge(v, ExtElement::monomial(Monomial(rest)));
  v *= Rat(z.shuffle_sign);

  // Remark-2 normalization: the sign is fixed by e_T z(T) = 1.
  Rat pairing = top_coeff(m.n(), wedge(ExtElement::monomial(Monomial(t)), v));
  if (pairing == -1) {
    z.normalization = -1;
    v *= Rat(-1);
  } else if (pairing != 1) {
    throw std::logic_error("z_of_nbc: pairing with e_T is not a unit");
  }
  z.value = std::move(v);
  return z;
}

std::vector<ExtElement> z_linear_factors(const Matroid& m, std::uint32_t t) {
  if (!m.is_nbc(t)) throw std::invalid_argument("z_linear_factors: set is not nbc");
  Flag f = flagify(m, indices_of(t));
  std::vector<ExtElement> factors;
  for (std::uint32_t part : partition_of_flag(f)) {
    int nu = std::countr_zero(part) + 1;
    for (int i : indices_of(part))
      if (i != nu) factors.push_back(ExtElement::generator(i) - ExtElement::generator(nu));
  }
  for (int j : indices_of(m.ground_set() & ~f.top()))
    factors.push_back(ExtElement::generator(j));
  return factors;
}

MergeCheck merge_multiply(int n, const std::vector<std::uint32_t>& parts, int i) {
  if (i < 1 || i >= static_cast<int>(parts.size()))
    throw std::invalid_argument("merge_multiply: part index out of range");
  ZElement z = z_of_partition(n, parts);
  int s = std::countr_zero(parts[i - 1]) + 1;
  int t = std::countr_zero(parts[i]) + 1;

  std::vector<std::uint32_t> merged;
  for (int j = 0; j < static_cast<int>(parts.size()); ++j) {
    if (j == i - 1)
      merged.push_back(parts[i - 1] | parts[i]);
    else if (j != i)
      merged.push_back(parts[j]);
  }
  ZElement zm = z_of_partition(n, merged);

  int exponent = 0;
  for (int j = 0; j < i; ++j) exponent += std::popcount(parts[j]) - 1;

  MergeCheck out;
  out.lhs = wedge(ExtElement::generator(t) - ExtElement::generator(s), z.value);
  out.rhs = (exponent & 1) ? -zm.value : zm.value;
  out.holds = (out.lhs == out.rhs);
  return out;
}

void VerifyReport::add_degree(int d, bool ok, std::string note) {
  degrees.push_back({d, ok, std::move(note)});
  pass = pass && ok;
}

void VerifyReport::add_check(const std::string& name, bool ok) {
  checks.emplace_back(name, ok);
  pass = pass && ok;
}

namespace {

// Monomials of degree q whose support contains the complement of some set in
// the family.
std::set<std::uint32_t> divisible_monomials(int n, int q,
                                            const std::vector<std::uint32_t>& family) {
  std::set<std::uint32_t> out;
  for (Monomial m : monomials_of_degree(n, q))
    for (std::uint32_t t : family) {
      std::uint32_t comp = full_mask(n) & ~t;
      if ((m.bits & comp) == comp) {
        out.insert(m.bits);
        break;
      }
    }
  return out;
}

std::set<std::uint32_t> lm_set(const std::vector<ExtElement>& basis) {
  std::set<std::uint32_t> out;
  for (const ExtElement& v : basis) out.insert(v.leading_monomial().bits);
  return out;
}

}  // namespace

VerifyReport groebner_verify(const Matroid& m) {
  VerifyReport rep;
  const int n = m.n();
  const int l = m.rank();
  GradedIdeal ideal = os_ideal(m);

  // Every z(T) annihilates every generator.
  bool z_in = true;
  for (std::uint32_t t : m.nbc_sets(l)) {
    ZElement z = z_of_nbc(m, t);
    for (const ExtElement& g : ideal.generators())
      if (!wedge(z.value, g).is_zero()) z_in = false;
  }
  rep.add_check("z_elements_in_annihilator", z_in);

  // tbc-sets (sets meeting every broken circuit) are exactly the complements
  // of nbc-sets.
  bool tbc_ok = true;
  for (std::uint32_t u = 0; u <= full_mask(n); ++u) {
    bool meets_all = true;
    for (std::uint32_t bc : m.broken_circuits())
      if ((u & bc) == 0) {
        meets_all = false;
        break;
      }
    std::uint32_t comp = full_mask(n) & ~u;
    bool comp_nbc = std::popcount(comp) <= l &&
                    std::find(m.nbc_sets(std::popcount(comp)).begin(),
                              m.nbc_sets(std::popcount(comp)).end(),
                              comp) != m.nbc_sets(std::popcount(comp)).end();
    if (meets_all != comp_nbc) {
      tbc_ok = false;
      break;
    }
  }
  rep.add_check("tbc_complements_of_nbc", tbc_ok);

  // In each degree the leading monomials of the annihilator component are the
  // multiples of the leading monomials of Z.
  for (int q = n - l; q <= n; ++q) {
    MonomialBasisSpace space(n, q, ideal.annihilator_component(q));
    std::set<std::uint32_t> got;
    for (Monomial lm : leading_monomials_of_space(space)) got.insert(lm.bits);
    std::set<std::uint32_t> expected = divisible_monomials(n, q, m.nbc_sets(l));
    rep.add_degree(q, got == expected,
                   got == expected ? "" : "leading monomial sets differ");
  }
  return rep;
}

VerifyReport zp_basis_verify(const Matroid& m, int p) {
  if (p < 0 || p > m.rank()) throw std::invalid_argument("zp_basis_verify: bad p");
  VerifyReport rep;
  const int n = m.n();
  GradedIdeal ideal = os_ideal(m);

  std::vector<ExtElement> zs;
  for (std::uint32_t t : m.nbc_sets(p)) zs.push_back(z_of_nbc(m, t).value);

  int d = n - p;
  int dim_ann = ideal.dim_annihilator(d);
  rep.add_check("size_matches_dimension", static_cast<int>(zs.size()) == dim_ann);
  MonomialBasisSpace span(n, d, zs);
  rep.add_check("linearly_independent", dim(span) == static_cast<int>(zs.size()));
  bool contained = true;
  for (const ExtElement& z : zs)
    if (!in_span(z, MonomialBasisSpace(n, d, ideal.annihilator_component(d)))) contained = false;
  rep.add_check("contained_in_annihilator", contained);

  // Remark 1: Z_p is a Groebner basis of the truncation at degrees >= n-p.
  for (int q = d; q <= n; ++q) {
    MonomialBasisSpace space(n, q, ideal.annihilator_component(q));
    std::set<std::uint32_t> got;
    for (Monomial lm : leading_monomials_of_space(space)) got.insert(lm.bits);
    std::set<std::uint32_t> expected = divisible_monomials(n, q, m.nbc_sets(p));
    rep.add_degree(q, got == expected);
  }
  return rep;
}

VerifyReport linear_ideal_intersection_verify(const Matroid& m) {
  VerifyReport rep;
  const int n = m.n();
  const int l = m.rank();
  GradedIdeal ideal = os_ideal(m);
  const auto& bases = m.nbc_sets(l);

  std::vector<GradedIdeal> linear_ideals;
  for (std::uint32_t t : bases) linear_ideals.emplace_back(n, z_linear_factors(m, t));

  // I = intersection of the I_T, degree by degree.
  for (int d = 1; d <= n; ++d) {
    std::vector<ExtElement> cur = linear_ideals.front().component(d);
    for (std::size_t i = 1; i < linear_ideals.size() && !cur.empty(); ++i)
      cur = intersect(MonomialBasisSpace(n, d, cur),
                      MonomialBasisSpace(n, d, linear_ideals[i].component(d)));
    bool ok = subspace_equal(MonomialBasisSpace(n, d, cur),
                             MonomialBasisSpace(n, d, ideal.component(d)));
    rep.add_degree(d, ok);
  }

  // (I_T)^0 = E z(T) degreewise.
  bool principal_ok = true;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    ExtElement z = z_of_nbc(m, bases[i]).value;
    for (int q = n - l; q <= n; ++q) {
      std::vector<ExtElement> mult;
      for (Monomial mm : monomials_of_degree(n, q - (n - l))) {
        ExtElement v = wedge(ExtElement::monomial(mm), z);
        if (!v.is_zero()) mult.push_back(std::move(v));
      }
      if (!subspace_equal(MonomialBasisSpace(n, q, mult),
                          MonomialBasisSpace(n, q, linear_ideals[i].annihilator_component(q))))
        principal_ok = false;
    }
  }
  rep.add_check("annihilator_of_linear_ideal_is_principal", principal_ok);
  return rep;
}

}  // namespace osx
