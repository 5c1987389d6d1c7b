#ifndef OSX_CRITERIA_HPP
#define OSX_CRITERIA_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osx/matroid.hpp"

namespace osx {

struct CriterionReport {
  bool verdict = false;
  std::optional<std::vector<std::uint32_t>> witness_partition;  // parts ordered by minimum
  std::optional<std::uint32_t> witness_set;
  std::map<std::string, long long> details;
};

// Least fixed point of adding the third point of any 3-circuit meeting the
// set in at least two points.
std::uint32_t line_closure(const Matroid& m, std::uint32_t s);

// Every lcl subset is a flat.  For rank-3 matroids the equivalent shortcut
// (every rank-3 subset has line-closure [n]) is run as well and must agree.
CriterionReport is_line_closed(const Matroid& m);

// Every circuit of size <= p has at least two points inside one part; this is
// equivalent to all transversals of at most p parts being independent.
bool is_partition_p_independent(const Matroid& m, const std::vector<std::uint32_t>& parts, int p);
// The transversal form, used as an independent check.
bool is_partition_p_independent_transversal(const Matroid& m,
                                            const std::vector<std::uint32_t>& parts, int p);
// Independent partition = (rank+1)-independent.
bool is_partition_independent(const Matroid& m, const std::vector<std::uint32_t>& parts);

// Exhaustive search over all set partitions of [n] for a p-independent
// partition that is not independent (3 <= p <= rank+1; n <= 12).
CriterionReport is_p_independent_matroid(const Matroid& m, int p);

// Enumerate all set partitions of 1..n as lists of parts ordered by their
// minimum; returning false stops the enumeration.
void for_each_partition(int n, const std::function<bool(const std::vector<std::uint32_t>&)>& fn);

// Number of connected components of the graph on 1..n with the given edges.
int component_count(int n, const std::vector<std::pair<int, int>>& edges);

struct GraphCheckReport {
  int max_components = 0;
  long long assignments = 0;
  bool exhaustive = true;       // false when the assignment cap was hit
  bool three_independent = false;  // derived verdict: max_components <= 3
};

// Rank <= 3 rephrasing of 3-independence: over all one-edge-per-line choices
// (lines = rank-2 flats with >= 3 points), report the maximal component count.
GraphCheckReport graph_component_check(const Matroid& m);

}  // namespace osx

#endif
