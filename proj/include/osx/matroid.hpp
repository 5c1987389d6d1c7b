#ifndef OSX_MATROID_HPP
#define OSX_MATROID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "osx/monomial.hpp"

namespace osx {

// A chain of flats X_0 = {} < X_1 < ... < X_k with rank(X_i) = i.
struct Flag {
  std::vector<std::uint32_t> flats;  // flats[0] == 0

  int length() const { return static_cast<int>(flats.size()) - 1; }
  std::uint32_t top() const { return flats.back(); }
  bool operator==(const Flag& o) const { return flats == o.flats; }
};

// Simple matroid on points 1..n given by its circuits.  Immutable after
// construction; circuits, broken circuits and nbc-sets are computed eagerly,
// rank and closure are pure functions.
class Matroid {
 public:
  static Matroid from_circuits(int n, const std::vector<std::vector<int>>& circuits);
  // Rank <= 3 point-line geometry: lines are the maximal rank-2 dependent
  // sets; they must pairwise meet in at most one point and have >= 3 points.
  static Matroid from_lines(int n, const std::vector<std::vector<int>>& lines);

  int n() const { return n_; }
  int rank() const { return rank_; }
  std::uint32_t ground_set() const { return full_mask(n_); }
  const std::vector<std::uint32_t>& circuits() const { return circuits_; }
  const std::vector<std::uint32_t>& broken_circuits() const { return broken_circuits_; }

  bool is_independent(std::uint32_t s) const;
  int rank_of(std::uint32_t s) const;
  std::uint32_t closure(std::uint32_t s) const;
  bool is_flat(std::uint32_t s) const { return closure(s) == s; }

  // nbc-sets of size p, ascending deg-lex (size p only exists for p <= rank).
  const std::vector<std::uint32_t>& nbc_sets(int p) const;
  // Min-closure criterion: T = {i_1<...<i_p} is nbc iff each i_r is the
  // smallest point of cl({i_r,...,i_p}).
  bool is_nbc(std::uint32_t t) const;

  // Rank-2 flats with >= 3 points.
  std::vector<std::uint32_t> lines() const;

  // Flats Y with X < Y < Z when rank(Z) = rank(X) + 2; they are the closures
  // of the one-point extensions of X inside Z.
  std::vector<std::uint32_t> flats_between(std::uint32_t x, std::uint32_t z) const;

  std::vector<Flag> maximal_flags() const;

  // Brute-force check of the circuit elimination axiom (diagnostic).
  void validate_circuit_axioms() const;

 private:
  Matroid() = default;
  void finish_construction();

  int n_ = 0;
  int rank_ = 0;
  std::vector<std::uint32_t> circuits_;
  std::vector<std::uint32_t> broken_circuits_;
  std::vector<std::vector<std::uint32_t>> nbc_;  // by cardinality 0..rank
};

// Flag of suffix closures of an ordered independent tuple: the rank-p flat is
// the closure of the last p entries.  For an ordered base the flag is maximal.
Flag flagify(const Matroid& m, const std::vector<int>& ordered);

// The ordered base reading a flag: the entry at position j (from the left) is
// min(X_{k-j+1} \ X_{k-j}), so that flagify(phi(F)) = F and phi(flagify(U)) = U
// for increasing U.
std::vector<int> phi(const Matroid& m, const Flag& f);

// Ordered difference sets S_i = X_i \ X_{i-1}.
std::vector<std::uint32_t> partition_of_flag(const Flag& f);

}  // namespace osx

#endif
