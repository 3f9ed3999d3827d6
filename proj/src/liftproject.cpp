#include "liftproject.hpp"

#include <algorithm>

namespace bincons {

int LiftedSystem::auxVarFor(int i) const {
  auto it = std::find(auxSource.begin(), auxSource.end(), i);
  if (it == auxSource.end())
    throw PreconditionError("no product variable for x" + std::to_string(i));
  return n + 1 + static_cast<int>(it - auxSource.begin());
}

LiftedSystem lift(const BinarySystem& S, int k) {
  if (k < 1 || k > S.n)
    throw PreconditionError("lift variable k must be in 1.." +
                            std::to_string(S.n));
  LiftedSystem L;
  L.n = S.n;
  L.k = k;
  for (int i = 1; i <= S.n; ++i)
    if (i != k) L.auxSource.push_back(i);

  std::vector<LinIneq> sources = S.rows;
  for (auto& b : boxRows(S.n)) sources.push_back(std::move(b));

  for (const auto& row : sources) {
    // row * x_k:  sum_{i != k} a_i y_i + (a_k - b) x_k >= 0
    LinIneq byK;
    for (const auto& [i, a] : row.coeffs) {
      if (i == k)
        byK.coeffs[k] += a;
      else
        byK.coeffs[L.auxVarFor(i)] += a;
    }
    byK.coeffs[k] -= row.rhs;
    L.rows.push_back(makeRow(std::move(byK.coeffs), 0));

    // row * (1 - x_k):  sum_{i != k} a_i (x_i - y_i) + b x_k >= b
    LinIneq byNotK;
    for (const auto& [i, a] : row.coeffs) {
      if (i == k) continue;
      byNotK.coeffs[i] += a;
      byNotK.coeffs[L.auxVarFor(i)] -= a;
    }
    byNotK.coeffs[k] += row.rhs;
    L.rows.push_back(makeRow(std::move(byNotK.coeffs), row.rhs));
  }
  return L;
}

ProjectedSystem fm_project(const LiftedSystem& L, const std::vector<int>& keep,
                           const FmOptions& opt) {
  for (std::size_t t = 0; t < keep.size(); ++t) {
    if (keep[t] < 1 || keep[t] > L.n)
      throw PreconditionError("kept variable x" + std::to_string(keep[t]) +
                              " is not an original variable");
    if (t > 0 && keep[t] <= keep[t - 1])
      throw PreconditionError("kept variables must be strictly increasing");
  }
  std::vector<LinIneq> input = L.rows;
  for (auto& b : boxRows(L.totalVars())) input.push_back(std::move(b));

  std::set<int> kept(keep.begin(), keep.end());
  std::vector<int> tier1, tier2;
  for (int v = L.n + 1; v <= L.totalVars(); ++v) tier1.push_back(v);
  for (int v = 1; v <= L.n; ++v)
    if (!kept.count(v)) tier2.push_back(v);

  auto res = fmEliminate(input, tier1, tier2, opt);
  ProjectedSystem out;
  out.keep = keep;
  out.rows.reserve(res.rows.size());
  for (auto& r : res.rows)
    out.rows.push_back(ProjectedRow{std::move(r.row), std::move(r.multipliers)});
  return out;
}

BinarySystem sequentialize(const BinarySystem& S, int k, ProjectionMode mode,
                           const FmOptions& opt) {
  std::vector<int> keep;
  if (mode == ProjectionMode::Prefix) {
    for (int v = 1; v < k; ++v) keep.push_back(v);
  } else {
    for (int v = 1; v <= S.n; ++v) keep.push_back(v);
  }
  FmOptions effective = opt;
  effective.lpPrune = true;
  auto proj = fm_project(lift(S, k), keep, effective);

  BinarySystem out = S;
  std::set<LinIneq, decltype(&ineqLess)> present(&ineqLess);
  for (const auto& row : S.rows) present.insert(canonicalRow(row));
  for (const auto& pr : proj.rows)
    if (present.insert(pr.row).second) out.rows.push_back(pr.row);
  return out;
}

std::vector<LinIneq> disjunctive_cuts(const BinarySystem& S, int k,
                                      const std::vector<Rat>& target,
                                      const FmOptions& opt) {
  if (target.size() != static_cast<std::size_t>(S.n))
    throw PreconditionError("target point has wrong dimension");
  std::vector<int> keep;
  for (int v = 1; v <= S.n; ++v) keep.push_back(v);
  FmOptions effective = opt;
  effective.lpPrune = true;
  auto proj = fm_project(lift(S, k), keep, effective);

  std::vector<LinIneq> out;
  for (const auto& pr : proj.rows)
    if (evaluate(pr.row, target) < pr.row.rhs) out.push_back(pr.row);
  return out;
}

}  // namespace bincons
