#include "osx/os_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace osx {

GradedIdeal::GradedIdeal(int n, std::vector<ExtElement> generators)
    : n_(n), gens_(std::move(generators)) {
  for (const ExtElement& g : gens_)
    if (g.is_zero() || !g.is_homogeneous())
      throw std::invalid_argument("ideal generators must be nonzero homogeneous");
}

const std::vector<ExtElement>& GradedIdeal::component(int d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = comp_.find(d);
  if (it == comp_.end()) it = comp_.emplace(d, ideal_component(n_, gens_, d)).first;
  return it->second;
}

const std::vector<ExtElement>& GradedIdeal::annihilator_component(int q) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ann_.find(q);
  if (it == ann_.end()) it = ann_.emplace(q, osx::annihilator_component(n_, gens_, q)).first;
  return it->second;
}

std::vector<ExtElement> ideal_component(int n, const std::vector<ExtElement>& gens, int d) {
  if (d < 0 || d > n) return {};
  std::vector<ExtElement> rows;
  for (const ExtElement& g : gens) {
    int dg = g.degree();
    if (dg > d) continue;
    for (Monomial m : monomials_of_degree(n, d - dg)) {
      ExtElement v = wedge(ExtElement::monomial(m), g);
      if (!v.is_zero()) rows.push_back(std::move(v));
    }
  }
  return reduced_basis(MonomialBasisSpace(n, d, std::move(rows)));
}

std::vector<ExtElement> annihilator_component(int n, const std::vector<ExtElement>& gens, int q) {
  if (q < 0 || q > n) return {};
  // Start from the full degree-q space and intersect with the kernel of
  // wedging against one generator at a time.
  std::vector<ExtElement> basis;
  for (Monomial m : monomials_of_degree(n, q)) basis.push_back(ExtElement::monomial(m));
  for (const ExtElement& g : gens) {
    if (basis.empty()) break;
    int image_degree = q + g.degree();
    if (image_degree > n) continue;  // everything annihilates
    std::vector<ExtElement> images;
    images.reserve(basis.size());
    for (const ExtElement& v : basis) images.push_back(wedge(v, g));
    basis = kernel_of_map(n, image_degree, basis, images).elements;
  }
  return reduced_basis(MonomialBasisSpace(n, q, std::move(basis)));
}

std::vector<ExtElement> os_generators(const Matroid& m) {
  std::vector<ExtElement> out;
  for (std::uint32_t c : m.circuits()) out.push_back(boundary(Monomial(c)));
  return out;
}

GradedIdeal os_ideal(const Matroid& m) { return GradedIdeal(m.n(), os_generators(m)); }

GradedIdeal j_ideal(const Matroid& m, int p) {
  if (p < 2) throw std::invalid_argument("j_ideal requires p >= 2");
  GradedIdeal ideal = os_ideal(m);
  std::vector<ExtElement> gens;
  for (int r = 2; r <= std::min(p, m.n()); ++r)
    for (const ExtElement& v : ideal.component(r)) gens.push_back(v);
  return GradedIdeal(m.n(), std::move(gens));
}

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<int> hilbert_series(const Matroid& m) {
  std::vector<int> h;
  for (int p = 0; p <= m.rank(); ++p) h.push_back(static_cast<int>(m.nbc_sets(p).size()));
  // Cross-check against the ideal dimensions: dim (E/I)_p = C(n,p) - dim I_p.
  GradedIdeal ideal = os_ideal(m);
  for (int p = 0; p <= m.rank(); ++p)
    if (binom(m.n(), p) - ideal.dim_component(p) != h[p])
      throw std::logic_error("hilbert series mismatch at degree " + std::to_string(p));
  return h;
}

QuadraticReport quadratic_check(const Matroid& m) {
  QuadraticReport rep;
  GradedIdeal ideal = os_ideal(m);
  GradedIdeal j2 = j_ideal(m, 2);
  for (int d = 3; d <= m.rank(); ++d) {
    int dj = j2.dim_component(d);
    int di = ideal.dim_component(d);
    if (dj != di) {
      rep.quadratic = false;
      rep.first_gap_degree = d;
      rep.dim_j2_at_gap = dj;
      rep.dim_i_at_gap = di;
      return rep;
    }
  }
  return rep;
}

}  // namespace osx
