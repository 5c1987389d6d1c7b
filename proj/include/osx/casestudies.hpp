#ifndef OSX_CASESTUDIES_HPP
#define OSX_CASESTUDIES_HPP

#include <string>
#include <vector>

#include "osx/os_ideal.hpp"

namespace osx {

// Built-in fixtures: "cross" (the 8-point line-closed matroid that is not
// 3-independent), "nine32" / "nine_three_2" (the (9_3)_2 configuration),
// "k4" (the graphic matroid of the complete graph on 4 vertices) and
// "uniform(k,n)".
Matroid fixture(const std::string& name);

// Permutation of 1..n acting on points; img[i-1] is the image of i.
struct Automorphism {
  std::vector<int> img;

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i - 1]; }
  Automorphism inverse() const;
  Automorphism compose(const Automorphism& o) const;  // this after o
  int order() const;
};

// The order-9 automorphism of the (9_3)_2 configuration.
Automorphism tau9();

bool is_matroid_automorphism(const Matroid& m, const Automorphism& sigma);

// Relabel indices and re-sort with signs; an algebra automorphism.
ExtElement apply_automorphism(const Automorphism& sigma, const ExtElement& a);

// The pencil of Example "notpure": x, p = (1 - tau)(1 + tau^3 + tau^6) x and
// q = tau p span the degree-5 annihilator of J(2,M); no nonzero combination of
// them is pure.
struct PencilReport {
  ExtElement x, p, q;
  std::vector<std::pair<std::string, bool>> checks;
  int dim_j0_5 = 0;
  int pure_samples = 0;
  bool pass = true;

  void add(const std::string& name, bool ok) {
    checks.emplace_back(name, ok);
    pass = pass && ok;
  }
};
PencilReport pencil_analysis();

struct DimensionAudit {
  int dim_i3 = 0;
  int dim_j2_3 = 0;
  bool pass = false;  // dim J(2)_3 <= 63 < 65 = dim I_3
};
DimensionAudit dimension_audit();

// The textual constraints pinning down the (9_3)_2 line set derived from the
// tau-orbit of {1,3,4}.
struct OracleReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool pass = true;

  void add(const std::string& name, bool ok) {
    checks.emplace_back(name, ok);
    pass = pass && ok;
  }
};
OracleReport nine32_fixture_oracle();

std::vector<std::vector<int>> nine32_lines();
std::vector<std::vector<int>> cross_lines();

}  // namespace osx

#endif
