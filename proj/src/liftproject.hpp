#pragma once

#include "fm.hpp"
#include "oracle.hpp"

namespace bincons {

// The system multiplied through by x_k and by (1 - x_k), with x_i * x_k
// replaced by a product variable and x_k^2 by x_k. Product variables sit
// after the originals: variable n + 1 + t stands for x_{auxSource[t]} * x_k.
struct LiftedSystem {
  int n = 0;
  int k = 0;
  std::vector<int> auxSource;
  std::vector<LinIneq> rows;

  int totalVars() const { return n + static_cast<int>(auxSource.size()); }
  int auxVarFor(int i) const;
};

// Multiplies every row of S and every box row, in input order, first by x_k
// then by (1 - x_k). Requires 1 <= k <= S.n.
LiftedSystem lift(const BinarySystem& S, int k);

struct ProjectedRow {
  LinIneq row;
  std::map<std::size_t, Rat> multipliers;
};

// Projection onto the kept original variables. Multiplier indices refer to
// L.rows first, then x_v >= 0 for every lifted variable v ascending, then
// -x_v >= -1 in the same order.
struct ProjectedSystem {
  std::vector<int> keep;
  std::vector<ProjectedRow> rows;
};

ProjectedSystem fm_project(const LiftedSystem& L, const std::vector<int>& keep,
                           const FmOptions& opt = {});

// What part of the projected lift gets appended by sequentialize:
//   Prefix      - projection onto x_1..x_{k-1}
//   ProductOnly - projection onto all of x_1..x_n (only the product
//                 variables are eliminated)
enum class ProjectionMode { Prefix, ProductOnly };

// S plus the projected rows (duplicates of existing rows are skipped).
BinarySystem sequentialize(const BinarySystem& S, int k, ProjectionMode mode,
                           const FmOptions& opt = {});

// Rows of the ProductOnly projection violated by the target point.
std::vector<LinIneq> disjunctive_cuts(const BinarySystem& S, int k,
                                      const std::vector<Rat>& target,
                                      const FmOptions& opt = {});

}  // namespace bincons
