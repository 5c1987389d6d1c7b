#ifndef OSX_OS_IDEAL_HPP
#define OSX_OS_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "osx/linalg.hpp"
#include "osx/matroid.hpp"

namespace osx {

// Homogeneous ideal of the exterior algebra given by a generator list, with
// exact per-degree bases of its components and of its annihilator components
// cached behind a lock.
class GradedIdeal {
 public:
  GradedIdeal(int n, std::vector<ExtElement> generators);

  int n() const { return n_; }
  const std::vector<ExtElement>& generators() const { return gens_; }

  // RREF basis of sum_g E_{d - deg g} * g.
  const std::vector<ExtElement>& component(int d) const;
  // RREF basis of {a in E_q : a wedge g = 0 for every generator g}; by graded
  // commutativity this is the degree-q part of the annihilator of the ideal.
  const std::vector<ExtElement>& annihilator_component(int q) const;

  int dim_component(int d) const { return static_cast<int>(component(d).size()); }
  int dim_annihilator(int q) const { return static_cast<int>(annihilator_component(q).size()); }

 private:
  int n_;
  std::vector<ExtElement> gens_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<ExtElement>> comp_;
  mutable std::map<int, std::vector<ExtElement>> ann_;
};

// Free-function versions backing the class.
std::vector<ExtElement> ideal_component(int n, const std::vector<ExtElement>& gens, int d);
std::vector<ExtElement> annihilator_component(int n, const std::vector<ExtElement>& gens, int q);

// Boundaries of the circuit monomials of M; over a field these generate the
// same graded ideal as the boundaries of all dependent sets.
std::vector<ExtElement> os_generators(const Matroid& m);

GradedIdeal os_ideal(const Matroid& m);
// J(p, M): generated by the full components I_r for 2 <= r <= p.
GradedIdeal j_ideal(const Matroid& m, int p);

// Dimensions of (E/I)_p for p = 0..rank; coefficient p is the number of
// nbc-sets of size p and is cross-checked against C(n,p) - dim I_p.
std::vector<int> hilbert_series(const Matroid& m);

struct QuadraticReport {
  bool quadratic = true;
  int first_gap_degree = -1;  // smallest d with dim J(2)_d < dim I_d
  int dim_j2_at_gap = -1;
  int dim_i_at_gap = -1;
};
// A = E/I is quadratic iff J(2,M) = I(M), i.e. the components agree for all
// 3 <= d <= rank.
QuadraticReport quadratic_check(const Matroid& m);

}  // namespace osx

#endif
