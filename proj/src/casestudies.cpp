#include "osx/casestudies.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "osx/linalg.hpp"

namespace osx {

std::vector<std::vector<int>> cross_lines() {
  return {{1, 2, 3, 4}, {1, 6, 7}, {2, 5, 8}, {3, 7, 8}, {4, 5, 6}};
}

Automorphism tau9() {
  // [261594837]: the image of i is the ith entry.
  return Automorphism{{2, 6, 1, 5, 9, 4, 8, 3, 7}};
}

std::vector<std::vector<int>> nine32_lines() {
  // The tau-orbit of the line {1,3,4} (the figure itself is not machine
  // readable; the orbit is pinned by the fixture oracle).
  Automorphism tau = tau9();
  std::vector<std::vector<int>> lines;
  std::uint32_t cur = mask_of({1, 3, 4});
  for (int step = 0; step < 9; ++step) {
    lines.push_back(indices_of(cur));
    std::uint32_t next = 0;
    for (int i : indices_of(cur)) next |= 1u << (tau(i) - 1);
    cur = next;
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

Matroid fixture(const std::string& name) {
  if (name == "cross") return Matroid::from_lines(8, cross_lines());
  if (name == "nine32" || name == "nine_three_2") return Matroid::from_lines(9, nine32_lines());
  if (name == "k4")
    return Matroid::from_lines(6, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6}});
  if (name.rfind("uniform(", 0) == 0 && name.back() == ')') {
    std::string body = name.substr(8, name.size() - 9);
    auto comma = body.find(',');
    if (comma != std::string::npos) {
      int k = std::stoi(body.substr(0, comma));
      int n = std::stoi(body.substr(comma + 1));
      if (k < 2 && k < n) throw std::invalid_argument("uniform(k,n) with k < 2 is not simple");
      std::vector<std::vector<int>> circuits;
      if (k < n) {
        for (std::uint32_t s = 0; s <= full_mask(n); ++s)
          if (std::popcount(s) == k + 1) circuits.push_back(indices_of(s));
      }
      return Matroid::from_circuits(n, circuits);
    }
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

Automorphism Automorphism::inverse() const {
  Automorphism out;
  out.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) out.img[img[i - 1] - 1] = i;
  return out;
}

Automorphism Automorphism::compose(const Automorphism& o) const {
  Automorphism out;
  out.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) out.img[i - 1] = img[o.img[i - 1] - 1];
  return out;
}

int Automorphism::order() const {
  Automorphism id;
  id.img.resize(img.size());
  std::iota(id.img.begin(), id.img.end(), 1);
  Automorphism cur = *this;
  int ord = 1;
  while (!(cur.img == id.img)) {
    cur = cur.compose(*this);
    ++ord;
    if (ord > 1000) throw std::logic_error("automorphism order overflow");
  }
  return ord;
}

bool is_matroid_automorphism(const Matroid& m, const Automorphism& sigma) {
  if (sigma.n() != m.n()) return false;
  std::set<std::uint32_t> circuits(m.circuits().begin(), m.circuits().end());
  for (std::uint32_t c : circuits) {
    std::uint32_t image = 0;
    for (int i : indices_of(c)) image |= 1u << (sigma(i) - 1);
    if (!circuits.count(image)) return false;
  }
  return true;
}

ExtElement apply_automorphism(const Automorphism& sigma, const ExtElement& a) {
  ExtElement out;
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> image;
    for (int i : indices_of(m.bits)) image.push_back(sigma(i));
    int inv = 0;
    for (std::size_t x = 0; x < image.size(); ++x)
      for (std::size_t y = x + 1; y < image.size(); ++y)
        if (image[x] > image[y]) ++inv;
    out.add_term(Monomial::from_indices(image), (inv & 1) ? Rat(-c) : c);
  }
  return out;
}

namespace {

ExtElement notpure_x() {
  ExtElement x;
  x.add_term(Monomial::from_indices({1, 2, 3, 6, 8}), Rat(1));
  x.add_term(Monomial::from_indices({1, 2, 4, 6, 9}), Rat(-1));
  x.add_term(Monomial::from_indices({1, 2, 4, 8, 9}), Rat(1));
  x.add_term(Monomial::from_indices({1, 2, 6, 8, 9}), Rat(-1));
  x.add_term(Monomial::from_indices({2, 3, 5, 6, 9}), Rat(-1));
  return x;
}

std::uint32_t apply_to_set(const Automorphism& sigma, std::uint32_t s) {
  std::uint32_t out = 0;
  for (int i : indices_of(s)) out |= 1u << (sigma(i) - 1);
  return out;
}

}  // namespace

PencilReport pencil_analysis() {
  PencilReport rep;
  Matroid m = fixture("nine32");
  Automorphism tau = tau9();
  const int n = m.n();

  rep.x = notpure_x();
  // p = (1 - tau)(1 + tau^3 + tau^6) x, q = tau p.
  auto tau_pow = [&](const ExtElement& v, int k) {
    ExtElement cur = v;
    for (int i = 0; i < k; ++i) cur = apply_automorphism(tau, cur);
    return cur;
  };
  ExtElement y = rep.x + tau_pow(rep.x, 3) + tau_pow(rep.x, 6);
  rep.p = y - apply_automorphism(tau, y);
  rep.q = apply_automorphism(tau, rep.p);

  GradedIdeal j2 = j_ideal(m, 2);
  const std::vector<ExtElement>& ann5 = j2.annihilator_component(5);
  rep.dim_j0_5 = static_cast<int>(ann5.size());
  rep.add("dim_J0_5_is_2", rep.dim_j0_5 == 2);

  MonomialBasisSpace ann_space(n, 5, ann5);
  rep.add("p_in_J0_5", in_span(rep.p, ann_space));
  rep.add("q_in_J0_5", in_span(rep.q, ann_space));
  rep.add("p_q_span_J0_5",
          subspace_equal(MonomialBasisSpace(n, 5, {rep.p, rep.q}), ann_space));

  // Support / basis-exchange failure at B = {1,2,6,8,9}: the coefficient of
  // e_B survives in every combination with alpha != 0, while both exchange
  // monomials are absent from the whole pencil.  The alpha = 0 branch is the
  // tau-translate of the same facts.
  std::uint32_t b = mask_of({1, 2, 6, 8, 9});
  std::uint32_t b5 = (b | mask_of({5})) & ~mask_of({9});
  std::uint32_t b7 = (b | mask_of({7})) & ~mask_of({9});
  ExtElement pp = rep.p, qq = rep.q;
  int translate = 0;
  for (; translate < 9; ++translate) {
    if (pp.coeff(Monomial(b)) != 0 && qq.coeff(Monomial(b)) == 0) break;
    b = apply_to_set(tau, b);
    b5 = apply_to_set(tau, b5);
    b7 = apply_to_set(tau, b7);
    pp = apply_automorphism(tau, pp);
    qq = apply_automorphism(tau, qq);
  }
  rep.add("support_triple_found", translate < 9);
  rep.add("B_in_support_of_p", pp.coeff(Monomial(b)) != 0);
  rep.add("B_absent_from_q", qq.coeff(Monomial(b)) == 0);
  rep.add("exchange_5_absent", pp.coeff(Monomial(b5)) == 0 && qq.coeff(Monomial(b5)) == 0);
  rep.add("exchange_7_absent", pp.coeff(Monomial(b7)) == 0 && qq.coeff(Monomial(b7)) == 0);

  // Sampled purity check across the projective line of the pencil.
  bool none_pure = true;
  int samples = 0;
  for (int den = 0; den <= 12 && samples < 120; ++den) {
    for (int num = -12; num <= 12 && samples < 120; ++num) {
      if (den == 0 && num != 1) continue;
      if (den > 0 && std::gcd(std::abs(num), den) != 1) continue;
      ExtElement r = rep.p * Rat(num) + rep.q * Rat(den);
      if (r.is_zero()) continue;
      ++samples;
      if (is_pure(n, r)) none_pure = false;
    }
  }
  rep.pure_samples = samples;
  rep.add("sampled_at_least_100_points", samples >= 100);
  rep.add("no_sampled_combination_is_pure", none_pure);
  return rep;
}

DimensionAudit dimension_audit() {
  DimensionAudit audit;
  Matroid m = fixture("nine32");
  GradedIdeal ideal = os_ideal(m);
  GradedIdeal j2 = j_ideal(m, 2);
  audit.dim_i3 = ideal.dim_component(3);
  audit.dim_j2_3 = j2.dim_component(3);
  audit.pass = audit.dim_i3 == 65 && audit.dim_j2_3 <= 63 && audit.dim_j2_3 < audit.dim_i3;
  return audit;
}

OracleReport nine32_fixture_oracle() {
  OracleReport rep;
  Automorphism tau = tau9();
  std::vector<int> sorted = tau.img;
  std::sort(sorted.begin(), sorted.end());
  rep.add("tau_is_a_permutation",
          sorted == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  rep.add("tau_has_order_9", tau.order() == 9);

  std::vector<std::vector<int>> lines = nine32_lines();
  rep.add("orbit_gives_9_lines", lines.size() == 9);
  bool triples = true;
  for (const auto& l : lines) triples = triples && l.size() == 3;
  rep.add("every_line_has_3_points", triples);

  Matroid m = fixture("nine32");
  rep.add("tau_is_an_automorphism", is_matroid_automorphism(m, tau));
  rep.add("rank_3", m.rank() == 3);

  std::set<std::vector<int>> line_set(lines.begin(), lines.end());
  rep.add("134_is_a_circuit", line_set.count({1, 3, 4}) == 1);
  rep.add("125_is_a_circuit", line_set.count({1, 2, 5}) == 1);
  rep.add("68_represents_a_circuit", [&] {
    for (const auto& l : lines) {
      std::uint32_t mask = mask_of(l);
      if ((mask & mask_of({6, 8})) == mask_of({6, 8})) return true;
    }
    return false;
  }());

  // The vertices not collinear with 1 are exactly 6 and 8.
  std::set<int> non_collinear;
  for (int v = 2; v <= 9; ++v) {
    bool collinear = false;
    for (const auto& l : lines) {
      std::uint32_t mask = mask_of(l);
      if ((mask & mask_of({1, v})) == mask_of({1, v})) collinear = true;
    }
    if (!collinear) non_collinear.insert(v);
  }
  rep.add("only_6_and_8_miss_point_1", non_collinear == std::set<int>{6, 8});

  std::vector<int> per_point(10, 0);
  for (const auto& l : lines)
    for (int i : l) ++per_point[i];
  bool three_each = true;
  for (int i = 1; i <= 9; ++i) three_each = three_each && per_point[i] == 3;
  rep.add("every_point_on_3_lines", three_each);

  rep.add("hilbert_series_1_9_27_19", hilbert_series(m) == std::vector<int>{1, 9, 27, 19});
  return rep;
}

}  // namespace osx
