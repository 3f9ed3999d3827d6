#pragma once

#include "lp.hpp"

#include <cstdint>

namespace bincons {

// How a partial assignment is tested against the system:
//   Exact       - some completion satisfies every row
//   CoveredRows - every row whose variables are all assigned holds
//   LP          - the [0,1] relaxation stays feasible under the fixings
enum class Relaxation { Exact, CoveredRows, LP };

enum class Property {
  Consistent,
  DomainConsistent,
  KConsistent,
  StrongKConsistent,
  SequentialKConsistent,
  LPConsistent,
  SequentialLPKConsistent,
};

struct OracleLimits {
  int enumCap = 22;  // hard ceiling on enumerated variables
};

struct FeasibleSet {
  int n = 0;
  std::vector<std::vector<int>> points;  // lexicographically sorted 0-1 points
};

struct ConsistencyReport {
  Property property;
  int k = 0;         // meaningful for the k-indexed properties
  bool verdict = true;
  std::optional<PartialAssignment> witness;  // first failure in scan order
};

// Every 0-1 point satisfying all rows, by depth-first search with a per-row
// optimistic bound. Throws CapError when S.n exceeds the enumeration cap.
FeasibleSet enumerate_feasible(const BinarySystem& S,
                               const OracleLimits& lim = {});

// Restriction of the feasible points to the coordinates in J (strictly
// increasing), deduplicated and sorted.
std::vector<std::vector<int>> project(const FeasibleSet& F,
                                      const std::vector<int>& J);

bool consistent_with(const BinarySystem& S, const PartialAssignment& a,
                     Relaxation rel, const OracleLimits& lim = {});

// Decides one consistency property by brute force, scanning candidate
// assignments in canonical order (subsets by size then lexicographically,
// values lexicographically) so the first witness is deterministic. The
// subset-indexed properties visit up to 3^n assignments; callers keep n
// small. k is required for the k-indexed properties and must be in 1..n.
ConsistencyReport check(const BinarySystem& S, Property prop, int k = 0,
                        const OracleLimits& lim = {});

// Width of the variable ordering in the constraint interaction graph: the
// maximum over variables of the number of earlier variables sharing a row.
int dependency_width(const BinarySystem& S, const std::vector<int>& order);

bool extendsToFeasible(const FeasibleSet& F, const PartialAssignment& a);

enum class RhsPolicy { Any, ForceFeasible };

// Deterministic instance generators for the property suites. ForceFeasible
// draws an anchor point and slack so the anchor satisfies every row.
BinarySystem random_system(int n, int m, int coeffRange, RhsPolicy policy,
                           std::uint64_t seed);
std::vector<Clause> random_clauses(int n, int m, std::uint64_t seed);

std::string propertyName(Property p);

}  // namespace bincons
