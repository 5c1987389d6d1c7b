#include "osx/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace osx {

MonomialBasisSpace::MonomialBasisSpace(int n_, int degree_, std::vector<ExtElement> vecs)
    : n(n_), degree(degree_), ambient(monomials_of_degree(n_, degree_)), vectors(std::move(vecs)) {
  for (const ExtElement& v : vectors)
    if (!v.is_zero() && (!v.is_homogeneous() || v.degree() != degree))
      throw std::invalid_argument("vector of wrong degree in MonomialBasisSpace");
}

RrefResult rref(RatMatrix m, int max_rank) {
  RrefResult res;
  if (m.empty()) return res;
  const int cols = static_cast<int>(m[0].size());
  const int rows = static_cast<int>(m.size());
  if (max_rank < 0) max_rank = std::min(rows, cols);
  int r = 0;
  for (int c = 0; c < cols && r < rows && r < max_rank; ++c) {
    // Prefer a unit pivot to keep entries integral for longer.
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      if (piv < 0) piv = i;
      if (m[i][c] == 1 || m[i][c] == -1) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    if (m[r][c] != 1) {
      Rat inv = m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] /= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    res.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  res.rows = std::move(m);
  return res;
}

RatRow to_row(const std::vector<Monomial>& ambient, const ExtElement& v) {
  RatRow row(ambient.size(), Rat(0));
  for (std::size_t j = 0; j < ambient.size(); ++j) row[j] = v.coeff(ambient[j]);
  return row;
}

ExtElement from_row(const std::vector<Monomial>& ambient, const RatRow& row) {
  ExtElement v;
  for (std::size_t j = 0; j < ambient.size(); ++j) v.add_term(ambient[j], row[j]);
  return v;
}

static RatMatrix rows_of(const MonomialBasisSpace& space) {
  RatMatrix m;
  m.reserve(space.vectors.size());
  for (const ExtElement& v : space.vectors) m.push_back(to_row(space.ambient, v));
  return m;
}

std::vector<ExtElement> reduced_basis(const MonomialBasisSpace& space) {
  RrefResult r = rref(rows_of(space), static_cast<int>(space.ambient.size()));
  std::vector<ExtElement> out;
  out.reserve(r.rows.size());
  for (const RatRow& row : r.rows) out.push_back(from_row(space.ambient, row));
  return out;
}

int dim(const MonomialBasisSpace& space) {
  return static_cast<int>(rref(rows_of(space)).rows.size());
}

bool in_span(const ExtElement& v, const MonomialBasisSpace& space) {
  RatMatrix m = rows_of(space);
  m.push_back(to_row(space.ambient, v));
  int full = static_cast<int>(rref(rows_of(space)).rows.size());
  return static_cast<int>(rref(std::move(m)).rows.size()) == full;
}

bool subspace_equal(const MonomialBasisSpace& a, const MonomialBasisSpace& b) {
  if (a.n != b.n || a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  return rref(rows_of(a)).rows == rref(rows_of(b)).rows;
}

std::vector<Monomial> leading_monomials_of_space(const MonomialBasisSpace& space) {
  RrefResult r = rref(rows_of(space));
  std::vector<Monomial> out;
  out.reserve(r.pivots.size());
  for (int c : r.pivots) out.push_back(space.ambient[c]);
  return out;
}

KernelResult kernel_of_map(int n, int image_degree, const std::vector<ExtElement>& domain,
                           const std::vector<ExtElement>& images) {
  if (domain.size() != images.size()) throw std::invalid_argument("kernel_of_map size mismatch");
  const std::vector<Monomial> ambient = monomials_of_degree(n, image_degree);
  const int k = static_cast<int>(domain.size());
  const int cols = static_cast<int>(ambient.size());
  // Augment [images | I] and row-reduce; rows whose image part vanishes carry
  // the kernel combinations in the identity part.
  RatMatrix m(k, RatRow(cols + k, Rat(0)));
  for (int i = 0; i < k; ++i) {
    RatRow row = to_row(ambient, images[i]);
    for (int j = 0; j < cols; ++j) m[i][j] = row[j];
    m[i][cols + i] = 1;
  }
  // Eliminate on the image columns only.
  int r = 0;
  const int rows = k;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      if (piv < 0) piv = i;
      if (m[i][c] == 1 || m[i][c] == -1) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    if (m[r][c] != 1) {
      Rat inv = m[r][c];
      for (int j = c; j < cols + k; ++j) m[r][j] /= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols + k; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  KernelResult out;
  for (int i = r; i < rows; ++i) {
    RatRow coeff(m[i].begin() + cols, m[i].end());
    ExtElement elem;
    for (int j = 0; j < k; ++j)
      if (coeff[j] != 0) elem += domain[j] * coeff[j];
    out.coeffs.push_back(std::move(coeff));
    out.elements.push_back(std::move(elem));
  }
  return out;
}

std::vector<ExtElement> intersect(const MonomialBasisSpace& a, const MonomialBasisSpace& b) {
  if (a.n != b.n || a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  std::vector<ExtElement> ba = reduced_basis(a);
  std::vector<ExtElement> bb = reduced_basis(b);
  // Solve sum c_i a_i = sum d_j b_j: kernel of the stacked coordinate system.
  std::vector<ExtElement> domain, images;
  for (const ExtElement& v : ba) {
    domain.push_back(v);
    images.push_back(v);
  }
  for (const ExtElement& v : bb) {
    domain.push_back(v);
    images.push_back(-v);
  }
  KernelResult ker = kernel_of_map(a.n, a.degree, domain, images);
  // Each kernel vector splits as (c, d) with sum c_i a_i = -sum d_j (-b_j);
  // read off the a-side combination.
  std::vector<ExtElement> out;
  for (const RatRow& coeff : ker.coeffs) {
    ExtElement v;
    for (std::size_t i = 0; i < ba.size(); ++i)
      if (coeff[i] != 0) v += ba[i] * coeff[i];
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  MonomialBasisSpace res(a.n, a.degree, std::move(out));
  return reduced_basis(res);
}

}  // namespace osx
