#ifndef OSX_PRESENTATION_HPP
#define OSX_PRESENTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "osx/zelements.hpp"

namespace osx {

// Entry of nbc': an nbc-set S of size rank-1 lying in at least two nbc-bases,
// with N(S) = {i : S u {i} is an nbc-base} and i(S) = min N(S).
struct NbcPrimeEntry {
  std::uint32_t s_set = 0;
  std::vector<int> n_of_s;
  int i_of_s = 0;
};
std::vector<NbcPrimeEntry> nbc_prime(const Matroid& m);

// An ordered base is neat when reading its flag back through phi reproduces
// the tuple.
bool is_neat(const Matroid& m, const std::vector<int>& u);

// S(a,k) places a at position k inside the sorted S; it is early when a sits
// at or left of its place in increasing order.
std::vector<int> inserted_tuple(std::uint32_t s_set, int a, int k);
bool is_early(std::uint32_t s_set, int a, int k);

struct GammaVertex {
  int a = 0;
  int k = 0;
  std::vector<int> tuple;
  bool standard = false;
};

// The tree Gamma(S): vertices are the neat early insertions S(a,k), edges the
// pairs S(a,k), S(b,k+1) whose one-point extensions of X^k close to the same
// flat.  Rooted at S(min N(S), 1); the leaves are the standard nbc-bases.
struct GammaTree {
  std::uint32_t s_set = 0;
  std::vector<GammaVertex> vertices;
  int root = -1;
  std::vector<std::pair<int, int>> edges;       // (parent index, child index)
  std::vector<std::vector<int>> children;       // down adjacency

  int find_vertex(int a, int k) const;
};
GammaTree gamma_tree(const Matroid& m, std::uint32_t s_set);

// The small tree t(S) on N(S): an edge (a,b) for every Gamma edge joining
// vertices with distinct inserted elements.
struct SmallTree {
  std::uint32_t s_set = 0;
  std::vector<int> vertices;                     // N(S)
  std::vector<std::pair<int, int>> edges;        // a < b
};
SmallTree t_tree(const Matroid& m, std::uint32_t s_set);
// The left-shift construction of the same tree; must agree with t_tree.
SmallTree t_tree_algorithmic(const Matroid& m, std::uint32_t s_set);

// Signed expansion of z(S(a,k)) in the standard generators: the standard
// descendants S(b,j) of the vertex contribute (-1)^{j-k} z(S(b,j)).  The
// expansion is verified against the direct value of z(flagify(S(a,k))).
std::map<std::uint32_t, int> expand_to_standard(const Matroid& m, const GammaTree& tree,
                                                int vertex);
std::map<std::uint32_t, int> expand_to_standard(const Matroid& m, std::uint32_t s_set, int a,
                                                int k);

// A degree-1 syzygy among the z(T), T running over the nbc-bases: a linear
// form per base, with sum_T coeff_T z(T) = 0 exactly (z via flagify, no
// renormalization).
struct Relation {
  enum class Kind { first, second };
  Kind kind = Kind::first;
  std::map<std::uint32_t, ExtElement> coeffs;
  std::string provenance;
};

ExtElement evaluate_relation(const Matroid& m, const Relation& r);

// One relation per edge of every t(S): the two close flags F = flag(S(a,k)),
// F' = flag(S(b,k+1)) satisfy
// (e_a - e_b) z(F) - (-1)^{|X_k|-|X'_k|} (e_{a'} - e_{b'}) z(F') = 0
// with a,b the minima of the parts surrounding the differing flat; both sides
// are expanded into standard generators.
std::vector<Relation> relations_first_kind(const Matroid& m);

// (e_j - e_{min A}) z(T) = 0 for every part A of pi(T) and j in A beyond the
// minimum; n - rank relations per base.
std::vector<Relation> relations_second_kind(const Matroid& m);

// The flag relation: replacing the rank-i flat of a maximal flag by each flat
// between its neighbours and summing the z gives zero.
bool flag_relation_check(const Matroid& m, const Flag& f, int i);

// Exact kernel of mu: (a_T) -> sum a_T z(T) on degree-1 coefficient tuples,
// compared against the relation lists.
struct RelationBasisReport {
  int kernel_dim = 0;
  int first_kind = 0;
  int second_kind = 0;
  bool all_vanish = false;
  bool independent = false;
  bool spans = false;
  bool pass() const { return all_vanish && independent && spans; }
};
RelationBasisReport verify_relation_basis(const Matroid& m);

// Diagnostic: the monomial syzygies of the initial ideal In(I^0), one per
// pair (S, i) with i in N(S) beyond i(S):
// (-1)^{eps(comp(S),i)} e_i e_{comp(S u i)} - (-1)^{eps(comp(S),i(S))} e_{i(S)} e_{comp(S u i(S))} = 0
// where eps(T,i) counts the elements of T below i.
struct MonomialRelation {
  std::uint32_t s_set = 0;
  int i = 0;
  ExtElement lhs;  // must be zero
};
std::vector<MonomialRelation> relations_first_kind_monomial(const Matroid& m);

}  // namespace osx

#endif
