#include "osx/ext_element.hpp"

#include <sstream>
#include <stdexcept>

#include "osx/linalg.hpp"

namespace osx {

std::uint32_t mask_of(const std::vector<int>& indices) {
  std::uint32_t m = 0;
  for (int i : indices) {
    if (i < 1 || i > 31) throw std::invalid_argument("point index out of range: " + std::to_string(i));
    m |= 1u << (i - 1);
  }
  return m;
}

std::vector<int> indices_of(std::uint32_t mask) {
  std::vector<int> out;
  for (std::uint32_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string set_str(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i : indices_of(mask)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::string Monomial::str() const {
  if (is_unit()) return "1";
  std::string s = "e[";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "]";
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0 || d > n) return out;
  std::uint32_t all = full_mask(n);
  for (std::uint32_t m = 0; m <= all; ++m)
    if (std::popcount(m) == d) out.emplace_back(m);
  std::sort(out.begin(), out.end(), DeglexGreater{});
  return out;
}

ExtElement ExtElement::monomial(Monomial m, Rat c) {
  ExtElement e;
  e.add_term(m, c);
  return e;
}

Rat ExtElement::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool ExtElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

int ExtElement::degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of zero element");
  return terms_.begin()->first.degree();
}

Monomial ExtElement::leading_monomial() const {
  if (terms_.empty()) throw std::invalid_argument("leading monomial of zero element");
  return terms_.begin()->first;
}

Rat ExtElement::leading_coeff() const {
  if (terms_.empty()) throw std::invalid_argument("leading coefficient of zero element");
  return terms_.begin()->second;
}

void ExtElement::add_term(Monomial m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExtElement& ExtElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ExtElement ExtElement::operator-() const {
  ExtElement r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

int wedge_sign(Monomial s, Monomial t) {
  if (!s.disjoint(t)) return 0;
  // Inversions between the blocks: pairs (x in s, y in t) with y < x.
  int inv = 0;
  for (std::uint32_t m = s.bits; m; m &= m - 1) {
    std::uint32_t below = (m & -m) - 1;
    inv += std::popcount(t.bits & below);
  }
  return (inv & 1) ? -1 : 1;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  ExtElement r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      r.add_term(Monomial(ma.bits | mb.bits), s > 0 ? Rat(ca * cb) : Rat(-(ca * cb)));
    }
  return r;
}

ExtElement boundary(Monomial m) {
  ExtElement r;
  int sign = 1;
  for (std::uint32_t b = m.bits; b; b &= b - 1) {
    std::uint32_t bit = b & -b;
    r.add_term(Monomial(m.bits & ~bit), Rat(sign));
    sign = -sign;
  }
  return r;
}

ExtElement boundary(const ExtElement& a) {
  ExtElement r;
  for (const auto& [m, c] : a.terms()) {
    ExtElement bm = boundary(m);
    bm *= c;
    r += bm;
  }
  return r;
}

ExtElement pure_from_factors(const std::vector<ExtElement>& factors) {
  ExtElement r = ExtElement::one();
  for (const ExtElement& f : factors) r = wedge(r, f);
  return r;
}

bool is_pure(int n, const ExtElement& r) {
  if (r.is_zero() || !r.is_homogeneous())
    throw std::invalid_argument("is_pure requires a nonzero homogeneous element");
  int k = r.degree();
  std::vector<ExtElement> domain, images;
  for (int i = 1; i <= n; ++i) {
    domain.push_back(ExtElement::generator(i));
    images.push_back(wedge(ExtElement::generator(i), r));
  }
  KernelResult ker = kernel_of_map(n, k + 1, domain, images);
  return static_cast<int>(ker.elements.size()) == k;
}

Rat top_coeff(int n, const ExtElement& a) { return a.coeff(Monomial(full_mask(n))); }

std::string to_string(const ExtElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rat abs = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.is_unit())
      os << abs.get_str();
    else if (abs == 1)
      os << m.str();
    else
      os << abs.get_str() << "*" << m.str();
  }
  return os.str();
}

}  // namespace osx
