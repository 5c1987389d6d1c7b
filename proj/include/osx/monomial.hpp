#ifndef OSX_MONOMIAL_HPP
#define OSX_MONOMIAL_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace osx {

inline std::uint32_t full_mask(int n) { return (1u << n) - 1u; }

std::uint32_t mask_of(const std::vector<int>& indices);
std::vector<int> indices_of(std::uint32_t mask);
std::string set_str(std::uint32_t mask);  // "{1,3,4}"

// Exterior monomial e_S for S subset of {1,...,n}, stored as a bitmask
// (bit i-1 set iff point i belongs to S).  The empty monomial is the unit.
struct Monomial {
  std::uint32_t bits = 0;

  Monomial() = default;
  explicit Monomial(std::uint32_t b) : bits(b) {}

  static Monomial unit() { return Monomial(); }
  static Monomial generator(int i) { return Monomial(1u << (i - 1)); }
  static Monomial from_indices(const std::vector<int>& idx) { return Monomial(mask_of(idx)); }

  int degree() const { return std::popcount(bits); }
  bool is_unit() const { return bits == 0; }
  bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
  bool contains(Monomial m) const { return (bits & m.bits) == m.bits; }
  bool disjoint(Monomial m) const { return (bits & m.bits) == 0; }
  Monomial complement(int n) const { return Monomial(full_mask(n) & ~bits); }

  std::vector<int> indices() const { return indices_of(bits); }
  std::string str() const;  // "e[1,3]", the unit prints as "1"

  friend bool operator==(Monomial a, Monomial b) { return a.bits == b.bits; }
  friend bool operator!=(Monomial a, Monomial b) { return a.bits != b.bits; }
};

// deg-lex order: higher degree wins; for equal degree the sorted index tuples
// are compared position by position, larger index at the first difference
// winning (e[2,3] > e[1,3] > e[1,2]).  For equal degree this is the same as:
// a < b iff min(a xor b) lies in a.
inline bool deglex_less(Monomial a, Monomial b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  std::uint32_t diff = a.bits ^ b.bits;
  if (diff == 0) return false;
  return (a.bits >> std::countr_zero(diff)) & 1u;
}

struct DeglexGreater {
  bool operator()(Monomial a, Monomial b) const { return deglex_less(b, a); }
};

// All degree-d monomials on n points, descending deg-lex.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace osx

#endif
