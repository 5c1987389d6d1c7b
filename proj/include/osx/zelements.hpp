#ifndef OSX_ZELEMENTS_HPP
#define OSX_ZELEMENTS_HPP

#include <string>
#include <vector>

#include "osx/matroid.hpp"
#include "osx/os_ideal.hpp"

namespace osx {

// One of the canonical annihilator elements, together with the sign data that
// produced it.
struct ZElement {
  ExtElement value;
  std::vector<std::uint32_t> parts;  // ordered partition behind the product
  int shuffle_sign = 1;              // parity of the block-concatenated word
  int normalization = 1;             // extra flip applied by z_of_nbc
};

// Parity of the permutation of [n] that lists the blocks in order, each block
// ascending.
int shuffle_sign(const std::vector<std::uint32_t>& parts);

// z(pi) = sign(shuffle) * d(e_{A_1}) ... d(e_{A_k}) for an ordered partition
// of [n]; lives in degree n - k.
ZElement z_of_partition(int n, const std::vector<std::uint32_t>& parts);

// z(F) = z(pi(F)) for a maximal flag F.
ZElement z_of_flag(const Matroid& m, const Flag& f);

// z(T) for an nbc-set T of any size p, built from the suffix flag of T with a
// trailing factor e_{[n] \ X_p}; the sign is normalized so that e_T z(T) = 1.
ZElement z_of_nbc(const Matroid& m, std::uint32_t t);

// The n - p degree-1 factors of z(T): e_i - e_{min A} for every part A of the
// flag partition and i in A beyond the minimum, plus the generators e_j for j
// outside the top flat.  They generate the linear ideal I_T.
std::vector<ExtElement> z_linear_factors(const Matroid& m, std::uint32_t t);

// Both sides of the merge identity (e_t - e_s) z(pi) = +-z(pi~) obtained by
// joining parts i and i+1, with s = min A_i, t = min A_{i+1} and the sign
// (-1)^{sum_{j<=i}(|A_j|-1)}.
struct MergeCheck {
  ExtElement lhs;
  ExtElement rhs;
  bool holds = false;
};
MergeCheck merge_multiply(int n, const std::vector<std::uint32_t>& parts, int i);

struct DegreeCheck {
  int degree = 0;
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  bool pass = true;
  std::vector<DegreeCheck> degrees;
  std::vector<std::pair<std::string, bool>> checks;

  void add_degree(int d, bool ok, std::string note = "");
  void add_check(const std::string& name, bool ok);
};

// Theorem-level verification that Z = {z(T) : T nbc base} is a deg-lex
// Groebner basis of the annihilator of the OS ideal: per degree the leading
// monomials of the annihilator component are exactly the monomials divisible
// by some e_{[n]\T}, plus the tbc characterization and Z lying inside the
// annihilator.
VerifyReport groebner_verify(const Matroid& m);

// Z_p is a basis of the annihilator component in degree n-p, and a Groebner
// basis of the truncation of the annihilator at degrees >= n-p.
VerifyReport zp_basis_verify(const Matroid& m, int p);

// I = intersection of the linear ideals I_T over nbc bases, degreewise, and
// the annihilator of I_T is the principal ideal E z(T).
VerifyReport linear_ideal_intersection_verify(const Matroid& m);

}  // namespace osx

#endif
