#include "search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace bincons {
namespace {

std::vector<int> branchOrder(const BinarySystem& S, const Strategy& strat) {
  std::vector<int> order = strat.order;
  if (order.empty()) {
    order.resize(S.n);
    std::iota(order.begin(), order.end(), 1);
    return order;
  }
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool perm = sorted.size() == static_cast<std::size_t>(S.n);
  for (int j = 1; perm && j <= S.n; ++j)
    if (sorted[j - 1] != j) perm = false;
  if (!perm)
    throw PreconditionError("branching order must be a permutation of 1.." +
                            std::to_string(S.n));
  return order;
}

std::vector<int> pointOf(const PartialAssignment& a, int n) {
  std::vector<int> pt(n, 0);
  for (const auto& [j, v] : a.bind) pt[j - 1] = v;
  return pt;
}

Relaxation pruneRelaxation(PruneCheck prune) {
  return prune == PruneCheck::ConstraintCheck ? Relaxation::CoveredRows
                                              : Relaxation::LP;
}

}  // namespace

SearchTrace feasibility_search(const BinarySystem& S, const Strategy& strat) {
  const std::vector<int> order = branchOrder(S, strat);
  const Relaxation rel = pruneRelaxation(strat.prune);
  SearchTrace tr;
  PartialAssignment cur;

  auto dfs = [&](auto&& self, int depth) -> bool {
    ++tr.nodes;
    tr.log.push_back({depth, cur, "open"});
    if (depth == S.n) {
      std::vector<int> pt = pointOf(cur, S.n);
      if (!satisfiesAll(S, pt))
        throw Error("internal: leaf passed pruning but fails exact check");
      tr.solution = pt;
      tr.log.push_back({depth, cur, "solution"});
      return true;
    }
    int var = order[depth];
    int first = 0;
    if (strat.valueOrder == ValueOrder::OneFirst) {
      first = 1;
    } else if (strat.valueOrder == ValueOrder::LpGuided) {
      auto out = lp_feasible(lpFromSystem(S, cur));
      if (out.status == LpStatus::Feasible &&
          (*out.witness)[var - 1] >= ratOf(1, 2))
        first = 1;
    }
    bool found = false;
    for (int t = 0; t < 2 && !found; ++t) {
      int v = first ^ t;
      cur.bind[var] = v;
      if (consistent_with(S, cur, rel)) {
        found = self(self, depth + 1);
      } else {
        tr.log.push_back({depth + 1, cur, "prune"});
      }
      cur.bind.erase(var);
    }
    if (!found && depth > 0) {
      ++tr.backtracks;
      tr.log.push_back({depth, cur, "backtrack"});
    }
    return found;
  };

  dfs(dfs, 0);
  return tr;
}

SearchTrace branch_and_bound(const BinarySystem& S,
                             const std::map<int, Rat>& objective,
                             const std::vector<int>& rootCutVars,
                             const Strategy& strat, LpSense sense) {
  for (const auto& [j, c] : objective) {
    (void)c;
    if (j < 1 || j > S.n)
      throw PreconditionError("objective variable out of range: x" +
                              std::to_string(j));
  }
  for (int k : rootCutVars)
    if (k < 1 || k > S.n)
      throw PreconditionError("cut variable out of range: x" +
                              std::to_string(k));

  BinarySystem work = S;
  const bool guard = strat.prune == PruneCheck::LpCheck;
  SearchTrace tr;
  std::optional<Rat> best;
  std::optional<std::vector<int>> bestPt;

  auto better = [&](const Rat& a, const Rat& b) {
    return sense == LpSense::Maximize ? a > b : a < b;
  };
  auto solveNode = [&](const PartialAssignment& fix) {
    LpProblem p = lpFromSystem(work, fix);
    p.objective = objective;
    p.sense = sense;
    return lp_optimize(p);
  };
  auto integral = [](const std::vector<Rat>& w) {
    return std::all_of(w.begin(), w.end(),
                       [](const Rat& v) { return v == 0 || v == 1; });
  };

  PartialAssignment fix;

  auto openNode = [&](auto&& self, int depth) -> void {
    ++tr.nodes;
    tr.log.push_back({depth, fix, "open"});
    auto out = solveNode(fix);
    if (out.status == LpStatus::Infeasible) {
      tr.log.push_back({depth, fix, "infeasible"});
      return;
    }
    if (out.status != LpStatus::Optimal)
      throw Error("internal: node relaxation neither optimal nor infeasible");

    if (depth == 0 && !rootCutVars.empty()) {
      // Cuts are generated against the original root optimum; the root is
      // then resolved once, still as the same node.
      std::set<LinIneq, decltype(&ineqLess)> present(&ineqLess);
      for (const auto& r : work.rows) present.insert(canonicalRow(r));
      FmOptions fop;
      fop.lpPrune = true;
      bool added = false;
      for (int k : rootCutVars) {
        for (const auto& cut : disjunctive_cuts(S, k, *out.witness, fop)) {
          if (!present.insert(canonicalRow(cut)).second) continue;
          work.rows.push_back(cut);
          added = true;
          tr.log.push_back({depth, fix, "cut: " + ineqStr(cut)});
        }
      }
      if (added) {
        out = solveNode(fix);
        if (out.status != LpStatus::Optimal)
          throw Error("internal: root became infeasible after valid cuts");
      }
    }

    const std::vector<Rat>& w = *out.witness;
    const Rat& val = *out.value;
    if (best && !better(val, *best)) {
      tr.log.push_back({depth, fix, "bound"});
      return;
    }
    if (integral(w)) {
      std::vector<int> pt(S.n);
      for (int j = 0; j < S.n; ++j) pt[j] = w[j] == 1 ? 1 : 0;
      if (!satisfiesAll(S, pt))
        throw Error("internal: integral relaxation optimum fails exact check");
      best = val;
      bestPt = pt;
      tr.log.push_back({depth, fix, "integral"});
      return;
    }

    int branchVar = 0;
    std::optional<Rat> bestDist;
    for (int j = 1; j <= S.n; ++j) {
      if (fix.bind.count(j)) continue;
      if (w[j - 1] == 0 || w[j - 1] == 1) continue;
      Rat dist = abs(w[j - 1] - ratOf(1, 2));
      if (!bestDist || dist < *bestDist) {
        bestDist = dist;
        branchVar = j;
      }
    }
    if (branchVar == 0)
      throw Error("internal: fractional optimum with no fractional variable");

    int first = strat.valueOrder == ValueOrder::OneFirst ? 1 : 0;
    if (strat.valueOrder == ValueOrder::LpGuided && w[branchVar - 1] >= ratOf(1, 2))
      first = 1;
    for (int t = 0; t < 2; ++t) {
      int v = first ^ t;
      if (best && !better(val, *best)) {
        tr.log.push_back({depth, fix, "bound"});
        break;
      }
      fix.bind[branchVar] = v;
      if (guard &&
          lp_feasible(lpFromSystem(work, fix)).status != LpStatus::Feasible) {
        tr.log.push_back({depth + 1, fix, "prune"});
      } else {
        self(self, depth + 1);
      }
      fix.bind.erase(branchVar);
    }
  };

  openNode(openNode, 0);
  tr.solution = bestPt;
  if (best) tr.value = *best;
  return tr;
}

namespace {

std::string describeRows(const BinarySystem& S) {
  std::ostringstream os;
  os << "n=" << S.n << " {";
  for (std::size_t i = 0; i < S.rows.size(); ++i) {
    if (i) os << "; ";
    os << ineqStr(S.rows[i]);
  }
  os << "}";
  return os.str();
}

}  // namespace

NoBacktrackReport no_backtrack_theorem_suite(int instances,
                                             unsigned long baseSeed) {
  NoBacktrackReport rep;
  OracleLimits lim;
  FmOptions fop;
  fop.lpPrune = true;

  for (int t = 0; t < instances; ++t) {
    std::mt19937_64 g(baseSeed + static_cast<unsigned long>(t));
    int n = 1 + static_cast<int>(g() % 4);
    int m = 1 + static_cast<int>(g() % 5);
    BinarySystem S = random_system(n, m, 3, RhsPolicy::ForceFeasible, g());
    ++rep.instances;

    auto fail = [&](const std::string& what) {
      ++rep.violations;
      rep.notes.push_back("seed " + std::to_string(baseSeed + t) + ", " +
                          describeRows(S) + ": " + what);
    };
    auto searchClean = [&](const BinarySystem& sys, PruneCheck prune,
                           const std::string& what) {
      Strategy st;
      st.prune = prune;
      SearchTrace trc = feasibility_search(sys, st);
      ++rep.applied;
      if (trc.backtracks != 0 || !trc.solution)
        fail(what + " backtracked (" + std::to_string(trc.backtracks) + ")");
    };

    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 1);
    int width = dependency_width(S, identity);
    for (int k = width + 1; k <= n; ++k) {
      if (check(S, Property::StrongKConsistent, k, lim).verdict) {
        searchClean(S, PruneCheck::ConstraintCheck,
                    "strong " + std::to_string(k) + "-consistent, width " +
                        std::to_string(width));
        break;
      }
    }

    bool seqAll = true;
    for (int k = 1; k <= n && seqAll; ++k)
      seqAll = check(S, Property::SequentialKConsistent, k, lim).verdict;
    if (seqAll)
      searchClean(S, PruneCheck::ConstraintCheck, "sequentially consistent");

    bool seqLpAll = true;
    for (int k = 1; k <= n && seqLpAll; ++k)
      seqLpAll = check(S, Property::SequentialLPKConsistent, k, lim).verdict;
    if (seqLpAll)
      searchClean(S, PruneCheck::LpCheck, "sequentially LP consistent");

    if (n > 3) continue;
    FeasibleSet F = enumerate_feasible(S, lim);

    for (ProjectionMode mode :
         {ProjectionMode::ProductOnly, ProjectionMode::Prefix}) {
      BinarySystem T = S;
      for (int k = 1; k <= n; ++k) T = sequentialize(T, k, mode, fop);
      const char* name =
          mode == ProjectionMode::ProductOnly ? "product chain" : "prefix chain";
      if (enumerate_feasible(T, lim).points != F.points) {
        fail(std::string(name) + " changed the feasible set");
        continue;
      }
      bool levels = true;
      for (int k = 1; k <= n && levels; ++k)
        levels = check(T, Property::SequentialLPKConsistent, k, lim).verdict;
      if (mode == ProjectionMode::ProductOnly) {
        ++rep.applied;
        if (!levels) {
          fail("product chain left a level inconsistent");
          continue;
        }
      } else if (!levels) {
        rep.notes.push_back("seed " + std::to_string(baseSeed + t) +
                            ": prefix chain left a level inconsistent, "
                            "search gate skipped");
        continue;
      }
      searchClean(T, PruneCheck::LpCheck, name);
    }
  }
  return rep;
}

}  // namespace bincons
