#ifndef OSX_LINALG_HPP
#define OSX_LINALG_HPP

#include <vector>

#include "osx/ext_element.hpp"

namespace osx {

// Homogeneous vectors of one degree, coordinatized over the full monomial
// basis of that degree in descending deg-lex order (so row-echelon pivots are
// leading monomials).
struct MonomialBasisSpace {
  int n = 0;
  int degree = 0;
  std::vector<Monomial> ambient;      // descending deg-lex
  std::vector<ExtElement> vectors;

  MonomialBasisSpace(int n_, int degree_, std::vector<ExtElement> vecs);
};

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

struct RrefResult {
  RatMatrix rows;              // nonzero rows of the reduced echelon form
  std::vector<int> pivots;     // pivot column per row
};

// Reduced row echelon form with exact rational pivoting.  If max_rank is
// reached early the remaining rows are discarded (they cannot add rank).
RrefResult rref(RatMatrix m, int max_rank = -1);

RatRow to_row(const std::vector<Monomial>& ambient, const ExtElement& v);
ExtElement from_row(const std::vector<Monomial>& ambient, const RatRow& row);

// RREF basis of the span.
std::vector<ExtElement> reduced_basis(const MonomialBasisSpace& space);
int dim(const MonomialBasisSpace& space);
bool in_span(const ExtElement& v, const MonomialBasisSpace& space);
bool subspace_equal(const MonomialBasisSpace& a, const MonomialBasisSpace& b);

// Pivot monomials of the RREF: the set of leading monomials of the spanned
// subspace.
std::vector<Monomial> leading_monomials_of_space(const MonomialBasisSpace& space);

// Kernel of the linear map sending domain[i] to image[i] (all images of one
// degree).  Returns both coefficient vectors and the corresponding
// combinations of the domain vectors.
struct KernelResult {
  std::vector<RatRow> coeffs;
  std::vector<ExtElement> elements;
};
KernelResult kernel_of_map(int n, int image_degree, const std::vector<ExtElement>& domain,
                           const std::vector<ExtElement>& images);

// Degreewise intersection of two spans.
std::vector<ExtElement> intersect(const MonomialBasisSpace& a, const MonomialBasisSpace& b);

}  // namespace osx

#endif
