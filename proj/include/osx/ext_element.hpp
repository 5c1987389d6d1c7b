#ifndef OSX_EXT_ELEMENT_HPP
#define OSX_EXT_ELEMENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "osx/monomial.hpp"

namespace osx {

using Rat = mpq_class;

// Sparse exterior-algebra element over the rationals.  Terms are kept in
// descending deg-lex order, so begin() is the leading term; zero coefficients
// are never stored.
class ExtElement {
 public:
  using TermMap = std::map<Monomial, Rat, DeglexGreater>;

  ExtElement() = default;

  static ExtElement zero() { return ExtElement(); }
  static ExtElement one() { return monomial(Monomial::unit()); }
  static ExtElement generator(int i) { return monomial(Monomial::generator(i)); }
  static ExtElement monomial(Monomial m, Rat c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rat coeff(Monomial m) const;
  bool is_homogeneous() const;
  // Degree of the leading term; element must be nonzero.
  int degree() const;
  Monomial leading_monomial() const;
  Rat leading_coeff() const;

  void add_term(Monomial m, const Rat& c);

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const Rat& c);

  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(ExtElement a, const Rat& c) { return a *= c; }
  friend ExtElement operator*(const Rat& c, ExtElement a) { return a *= c; }
  ExtElement operator-() const;

  bool operator==(const ExtElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const ExtElement& o) const { return !(*this == o); }

 private:
  TermMap terms_;
};

// Sign of e_S e_T as a rearrangement of e_{S u T}; 0 when S and T intersect.
int wedge_sign(Monomial s, Monomial t);

ExtElement wedge(const ExtElement& a, const ExtElement& b);
inline ExtElement wedge(const ExtElement& a, const ExtElement& b, const ExtElement& c) {
  return wedge(wedge(a, b), c);
}

// The degree -1 differential with de_i = 1 and the Leibniz rule; on e_S it is
// the alternating sum over deletions of single indices.
ExtElement boundary(Monomial m);
ExtElement boundary(const ExtElement& a);

// Left-to-right wedge of degree-1 factors; the empty product is 1.
ExtElement pure_from_factors(const std::vector<ExtElement>& factors);

// A nonzero homogeneous r of degree k is pure iff the space of degree-1
// elements annihilating it has dimension exactly k.
bool is_pure(int n, const ExtElement& r);

// Coefficient of the top monomial e_{[n]}.
Rat top_coeff(int n, const ExtElement& a);

// Terms in descending deg-lex order, monomials as e[i1,i2,...], coefficients
// as p/q.
std::string to_string(const ExtElement& a);

}  // namespace osx

#endif
