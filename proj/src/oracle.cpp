#include "oracle.hpp"

#include <algorithm>
#include <random>

namespace bincons {
namespace {

void validateSystem(const BinarySystem& S) {
  for (const auto& row : S.rows)
    for (const auto& [j, c] : row.coeffs) {
      (void)c;
      if (j < 1 || j > S.n)
        throw PreconditionError("row mentions variable x" + std::to_string(j) +
                                " outside 1.." + std::to_string(S.n));
    }
}

// Every row whose variables are all assigned must hold.
bool coveredRowsOk(const BinarySystem& S, const PartialAssignment& a) {
  for (const auto& row : S.rows) {
    Rat sum = 0;
    bool covered = true;
    for (const auto& [j, c] : row.coeffs) {
      auto it = a.bind.find(j);
      if (it == a.bind.end()) {
        covered = false;
        break;
      }
      if (it->second) sum += c;
    }
    if (covered && sum < row.rhs) return false;
  }
  return true;
}

bool completionExists(const BinarySystem& S, const PartialAssignment& a,
                      int cap) {
  int freeCount = 0;
  for (int j = 1; j <= S.n; ++j)
    if (!a.bind.count(j)) ++freeCount;
  if (freeCount > cap)
    throw CapError("completion search over " + std::to_string(freeCount) +
                   " free variables exceeds cap " + std::to_string(cap));
  std::vector<int> p(S.n, -1);
  for (const auto& [j, v] : a.bind) p[j - 1] = v;

  auto admissible = [&](int depth) {
    // Assigned prefix plus the best the free suffix could contribute.
    for (const auto& row : S.rows) {
      Rat sum = 0;
      for (const auto& [j, c] : row.coeffs) {
        if (j <= depth || p[j - 1] >= 0) {
          if (p[j - 1] == 1) sum += c;
        } else if (c > 0) {
          sum += c;
        }
      }
      if (sum < row.rhs) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int depth) -> bool {
    if (!admissible(depth)) return false;
    if (depth == S.n) return true;
    if (p[depth] >= 0) return self(self, depth + 1);
    for (int v = 0; v <= 1; ++v) {
      p[depth] = v;
      if (self(self, depth + 1)) {
        p[depth] = -1;
        return true;
      }
    }
    p[depth] = -1;
    return false;
  };
  return rec(rec, 0);
}

// Subsets of {1..n} of size s in lexicographic order; f returns false to
// stop the scan. Returns false iff stopped early.
template <typename F>
bool forEachSubsetOfSize(int n, int s, F&& f) {
  std::vector<int> J(s);
  for (int i = 0; i < s; ++i) J[i] = i + 1;
  if (s == 0) return f(J);
  while (true) {
    if (!f(J)) return false;
    int i = s - 1;
    while (i >= 0 && J[i] == n - (s - 1 - i)) --i;
    if (i < 0) return true;
    ++J[i];
    for (int t = i + 1; t < s; ++t) J[t] = J[t - 1] + 1;
  }
}

// Values in lexicographic order over the (sorted) index set J: the first
// index is the most significant bit of mask.
PartialAssignment assignmentOf(const std::vector<int>& J, unsigned mask) {
  PartialAssignment a;
  const int s = static_cast<int>(J.size());
  for (int t = 0; t < s; ++t)
    a.bind[J[t]] = static_cast<int>((mask >> (s - 1 - t)) & 1u);
  return a;
}

}  // namespace

FeasibleSet enumerate_feasible(const BinarySystem& S, const OracleLimits& lim) {
  validateSystem(S);
  if (S.n > lim.enumCap)
    throw CapError("enumeration over " + std::to_string(S.n) +
                   " variables exceeds cap " + std::to_string(lim.enumCap));
  FeasibleSet F;
  F.n = S.n;
  std::vector<int> p(S.n, 0);
  auto admissible = [&](int depth) {
    for (const auto& row : S.rows) {
      Rat sum = 0;
      for (const auto& [j, c] : row.coeffs) {
        if (j <= depth) {
          if (p[j - 1]) sum += c;
        } else if (c > 0) {
          sum += c;
        }
      }
      if (sum < row.rhs) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (!admissible(depth)) return;
    if (depth == S.n) {
      F.points.push_back(p);
      return;
    }
    p[depth] = 0;
    self(self, depth + 1);
    p[depth] = 1;
    self(self, depth + 1);
    p[depth] = 0;
  };
  rec(rec, 0);
  return F;
}

std::vector<std::vector<int>> project(const FeasibleSet& F,
                                      const std::vector<int>& J) {
  for (std::size_t t = 0; t < J.size(); ++t) {
    if (J[t] < 1 || J[t] > F.n)
      throw PreconditionError("projection index x" + std::to_string(J[t]) +
                              " outside 1.." + std::to_string(F.n));
    if (t > 0 && J[t] <= J[t - 1])
      throw PreconditionError("projection indices must be strictly increasing");
  }
  std::set<std::vector<int>> out;
  for (const auto& p : F.points) {
    std::vector<int> q;
    q.reserve(J.size());
    for (int j : J) q.push_back(p[j - 1]);
    out.insert(std::move(q));
  }
  return {out.begin(), out.end()};
}

bool consistent_with(const BinarySystem& S, const PartialAssignment& a,
                     Relaxation rel, const OracleLimits& lim) {
  validateSystem(S);
  validateAssignment(a, S.n);
  switch (rel) {
    case Relaxation::CoveredRows:
      return coveredRowsOk(S, a);
    case Relaxation::Exact:
      return completionExists(S, a, lim.enumCap);
    case Relaxation::LP:
      return lp_feasible(lpFromSystem(S, a)).status == LpStatus::Feasible;
  }
  throw Error("internal: unknown relaxation");
}

bool extendsToFeasible(const FeasibleSet& F, const PartialAssignment& a) {
  for (const auto& p : F.points) {
    bool match = true;
    for (const auto& [j, v] : a.bind)
      if (p[j - 1] != v) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

namespace {

// Shared k-consistency kernel: every coveredRows-consistent assignment over
// each candidate J extends to each extra variable j. J is either all
// (k-1)-subsets or just the first k-1 variables (sequential flavor), and j
// ranges over all unassigned variables or just variable k respectively.
std::optional<PartialAssignment> kConsistencyFailure(const BinarySystem& S,
                                                     int k, bool sequential) {
  const int n = S.n;
  std::optional<PartialAssignment> found;
  auto processJ = [&](const std::vector<int>& J) -> bool {
    const int s = static_cast<int>(J.size());
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      PartialAssignment a = assignmentOf(J, mask);
      if (!coveredRowsOk(S, a)) continue;
      auto tryVar = [&](int j) -> bool {
        for (int v = 0; v <= 1; ++v) {
          PartialAssignment b = a;
          b.bind[j] = v;
          if (coveredRowsOk(S, b)) return true;
        }
        return false;
      };
      if (sequential) {
        if (!tryVar(k)) {
          found = a;
          return false;
        }
      } else {
        for (int j = 1; j <= n; ++j) {
          if (a.bind.count(j)) continue;
          if (!tryVar(j)) {
            found = a;
            return false;
          }
        }
      }
    }
    return true;
  };
  if (sequential) {
    std::vector<int> J(k - 1);
    for (int i = 0; i < k - 1; ++i) J[i] = i + 1;
    processJ(J);
  } else {
    forEachSubsetOfSize(n, k - 1, processJ);
  }
  return found;
}

}  // namespace

ConsistencyReport check(const BinarySystem& S, Property prop, int k,
                        const OracleLimits& lim) {
  validateSystem(S);
  ConsistencyReport rep;
  rep.property = prop;
  rep.k = k;
  const int n = S.n;
  const bool indexed =
      prop == Property::KConsistent || prop == Property::StrongKConsistent ||
      prop == Property::SequentialKConsistent ||
      prop == Property::SequentialLPKConsistent;
  if (indexed && (k < 1 || k > n))
    throw PreconditionError("k must be in 1.." + std::to_string(n));

  auto fail = [&](PartialAssignment w) {
    rep.verdict = false;
    rep.witness = std::move(w);
  };

  switch (prop) {
    case Property::Consistent: {
      FeasibleSet F = enumerate_feasible(S, lim);
      for (int s = 0; s <= n && rep.verdict; ++s)
        forEachSubsetOfSize(n, s, [&](const std::vector<int>& J) {
          for (unsigned mask = 0; mask < (1u << J.size()); ++mask) {
            PartialAssignment a = assignmentOf(J, mask);
            if (coveredRowsOk(S, a) && !extendsToFeasible(F, a)) {
              fail(a);
              return false;
            }
          }
          return true;
        });
      break;
    }
    case Property::DomainConsistent: {
      FeasibleSet F = enumerate_feasible(S, lim);
      for (int j = 1; j <= n && rep.verdict; ++j)
        for (int v = 0; v <= 1 && rep.verdict; ++v) {
          PartialAssignment a;
          a.bind[j] = v;
          if (!extendsToFeasible(F, a)) fail(a);
        }
      break;
    }
    case Property::KConsistent: {
      if (auto w = kConsistencyFailure(S, k, false)) fail(std::move(*w));
      break;
    }
    case Property::StrongKConsistent: {
      for (int kk = 1; kk <= k && rep.verdict; ++kk)
        if (auto w = kConsistencyFailure(S, kk, false)) fail(std::move(*w));
      break;
    }
    case Property::SequentialKConsistent: {
      if (auto w = kConsistencyFailure(S, k, true)) fail(std::move(*w));
      break;
    }
    case Property::LPConsistent: {
      FeasibleSet F = enumerate_feasible(S, lim);
      // LP feasibility is monotone under restriction, so an assignment with
      // an infeasible sub-assignment can be skipped without solving.
      std::vector<unsigned long long> pow3(n + 1, 1);
      for (int j = 1; j <= n; ++j) pow3[j] = pow3[j - 1] * 3ull;
      std::map<unsigned long long, bool> memo;
      auto keyOf = [&](const PartialAssignment& a) {
        unsigned long long key = 0;
        for (const auto& [j, v] : a.bind) key += (1ull + v) * pow3[j - 1];
        return key;
      };
      auto lpOk = [&](const PartialAssignment& a) {
        unsigned long long key = keyOf(a);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = true;
        for (const auto& [j, v] : a.bind) {
          auto sub = memo.find(key - (1ull + v) * pow3[j - 1]);
          if (sub != memo.end() && !sub->second) {
            ok = false;
            break;
          }
        }
        if (ok)
          ok = lp_feasible(lpFromSystem(S, a)).status == LpStatus::Feasible;
        memo.emplace(key, ok);
        return ok;
      };
      for (int s = 0; s <= n && rep.verdict; ++s)
        forEachSubsetOfSize(n, s, [&](const std::vector<int>& J) {
          for (unsigned mask = 0; mask < (1u << J.size()); ++mask) {
            PartialAssignment a = assignmentOf(J, mask);
            if (lpOk(a) && !extendsToFeasible(F, a)) {
              fail(a);
              return false;
            }
          }
          return true;
        });
      break;
    }
    case Property::SequentialLPKConsistent: {
      std::vector<int> J(k - 1);
      for (int i = 0; i < k - 1; ++i) J[i] = i + 1;
      auto lpOk = [&](const PartialAssignment& a) {
        return lp_feasible(lpFromSystem(S, a)).status == LpStatus::Feasible;
      };
      for (unsigned mask = 0; mask < (1u << (k - 1)) && rep.verdict; ++mask) {
        PartialAssignment a = assignmentOf(J, mask);
        if (!lpOk(a)) continue;
        bool ext = false;
        for (int v = 0; v <= 1 && !ext; ++v) {
          PartialAssignment b = a;
          b.bind[k] = v;
          ext = lpOk(b);
        }
        if (!ext) fail(a);
      }
      break;
    }
  }
  return rep;
}

int dependency_width(const BinarySystem& S, const std::vector<int>& order) {
  validateSystem(S);
  const int n = S.n;
  if (order.size() != static_cast<std::size_t>(n))
    throw PreconditionError("ordering must list every variable exactly once");
  std::vector<int> pos(n + 1, -1);
  for (int t = 0; t < n; ++t) {
    int j = order[t];
    if (j < 1 || j > n || pos[j] >= 0)
      throw PreconditionError("ordering must list every variable exactly once");
    pos[j] = t;
  }
  std::vector<std::set<int>> adj(n + 1);
  for (const auto& row : S.rows) {
    std::vector<int> vars;
    for (const auto& [j, c] : row.coeffs) {
      (void)c;
      vars.push_back(j);
    }
    for (std::size_t a = 0; a < vars.size(); ++a)
      for (std::size_t b = a + 1; b < vars.size(); ++b) {
        adj[vars[a]].insert(vars[b]);
        adj[vars[b]].insert(vars[a]);
      }
  }
  int width = 0;
  for (int t = 0; t < n; ++t) {
    int back = 0;
    for (int u : adj[order[t]])
      if (pos[u] < t) ++back;
    width = std::max(width, back);
  }
  return width;
}

BinarySystem random_system(int n, int m, int coeffRange, RhsPolicy policy,
                           std::uint64_t seed) {
  if (n < 1 || m < 0 || coeffRange < 1)
    throw PreconditionError("random_system needs n >= 1, m >= 0, range >= 1");
  std::mt19937_64 rng(seed);
  auto pick = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  BinarySystem S;
  S.n = n;
  std::vector<int> anchor(n);
  for (int j = 0; j < n; ++j) anchor[j] = static_cast<int>(rng() % 2);
  for (int i = 0; i < m; ++i) {
    LinIneq row;
    for (int j = 1; j <= n; ++j) {
      long c = pick(-coeffRange, coeffRange);
      if (c != 0) row.coeffs[j] = Rat(c);
    }
    if (policy == RhsPolicy::Any) {
      row.rhs = Rat(pick(-coeffRange, coeffRange));
    } else {
      Rat at = evaluate(row, toRatPoint(anchor));
      row.rhs = at - Rat(pick(0, coeffRange));
    }
    S.rows.push_back(std::move(row));
  }
  return S;
}

std::vector<Clause> random_clauses(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 0)
    throw PreconditionError("random_clauses needs n >= 1, m >= 0");
  std::mt19937_64 rng(seed);
  std::vector<Clause> out;
  for (int i = 0; i < m; ++i) {
    Clause c;
    for (int j = 1; j <= n; ++j) {
      bool in = rng() % 2;
      bool pol = rng() % 2;
      if (!in) continue;
      (pol ? c.pos : c.neg).insert(j);
    }
    if (c.empty()) {
      int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      ((rng() % 2) ? c.pos : c.neg).insert(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string propertyName(Property p) {
  switch (p) {
    case Property::Consistent:
      return "consistent";
    case Property::DomainConsistent:
      return "domain-consistent";
    case Property::KConsistent:
      return "k-consistent";
    case Property::StrongKConsistent:
      return "strong-k-consistent";
    case Property::SequentialKConsistent:
      return "sequentially-k-consistent";
    case Property::LPConsistent:
      return "lp-consistent";
    case Property::SequentialLPKConsistent:
      return "sequentially-lp-k-consistent";
  }
  return "unknown";
}

}  // namespace bincons
