#include "lp.hpp"

#include <algorithm>
#include <utility>

namespace bincons {
namespace {

struct ColBounds {
  bool hasLo = false, hasHi = false;
  Rat lo = 0, hi = 0;

  bool fixed() const { return hasLo && hasHi && lo == hi; }
};

// Bounded-variable two-phase primal simplex on a full exact tableau.
// Columns: structurals, then one surplus and one artificial per row, so the
// equality form of row i is a_i x - s_i + t_i = b_i. Entering and leaving
// choices follow Bland's rule (smallest column index among the eligible /
// among the tied blockers), which makes every solve deterministic and
// immune to cycling.
struct Simplex {
  int numStruct = 0, numRows = 0, total = 0;
  std::vector<std::vector<Rat>> T;
  std::vector<Rat> beta;      // value of the basic variable of each row
  std::vector<int> basis;     // row -> column
  std::vector<char> inBasis;  // column -> bool
  std::vector<ColBounds> col;
  std::vector<Rat> rest;  // resting value of each nonbasic column
  std::vector<Rat> cost;
  std::vector<Rat> rhs;

  int surCol(int i) const { return numStruct + i; }
  int artCol(int i) const { return numStruct + numRows + i; }

  std::vector<Rat> basisCosts() const {
    std::vector<Rat> zb(numRows);
    for (int i = 0; i < numRows; ++i) zb[i] = cost[basis[i]];
    return zb;
  }

  Rat reduced(const std::vector<Rat>& zb, int j) const {
    Rat d = cost[j];
    for (int i = 0; i < numRows; ++i)
      if (zb[i] != 0 && T[i][j] != 0) d -= zb[i] * T[i][j];
    return d;
  }

  bool atLo(int j) const { return col[j].hasLo && rest[j] == col[j].lo; }
  bool atHi(int j) const { return col[j].hasHi && rest[j] == col[j].hi; }

  // Pivots until no entering column improves the current cost vector.
  // Returns false only when an improving direction is unblocked (unbounded).
  bool minimize() {
    while (true) {
      auto zb = basisCosts();
      int e = -1, dir = 0;
      for (int j = 0; j < total; ++j) {
        if (inBasis[j] || col[j].fixed()) continue;
        int s = sgn(reduced(zb, j));
        if (s < 0 && !atHi(j)) {
          e = j;
          dir = 1;
          break;
        }
        if (s > 0 && !atLo(j)) {
          e = j;
          dir = -1;
          break;
        }
      }
      if (e < 0) return true;

      // Ratio test: how far the entering value can move before a basic
      // variable (or the entering variable itself) hits a bound.
      bool haveT = false, leaveAtLo = false;
      Rat tBest = 0;
      int blockRow = -1, blockCol = -1;
      if (dir > 0 ? col[e].hasHi : col[e].hasLo) {
        tBest = dir > 0 ? col[e].hi - rest[e] : rest[e] - col[e].lo;
        haveT = true;
        blockCol = e;
      }
      for (int i = 0; i < numRows; ++i) {
        const Rat& w = T[i][e];
        if (w == 0) continue;
        int b = basis[i];
        Rat g = dir > 0 ? w : Rat(-w);  // beta[i] moves by -g*t
        if (sgn(g) > 0) {
          if (!col[b].hasLo) continue;
          Rat t = (beta[i] - col[b].lo) / g;
          if (!haveT || t < tBest || (t == tBest && b < blockCol)) {
            haveT = true;
            tBest = std::move(t);
            blockRow = i;
            blockCol = b;
            leaveAtLo = true;
          }
        } else {
          if (!col[b].hasHi) continue;
          Rat t = (col[b].hi - beta[i]) / -g;
          if (!haveT || t < tBest || (t == tBest && b < blockCol)) {
            haveT = true;
            tBest = std::move(t);
            blockRow = i;
            blockCol = b;
            leaveAtLo = false;
          }
        }
      }
      if (!haveT) return false;

      Rat step = dir > 0 ? tBest : Rat(-tBest);
      for (int i = 0; i < numRows; ++i)
        if (T[i][e] != 0) beta[i] -= step * T[i][e];
      if (blockCol == e) {
        rest[e] += step;
        continue;
      }
      int leave = basis[blockRow];
      beta[blockRow] = rest[e] + step;
      rest[leave] = leaveAtLo ? col[leave].lo : col[leave].hi;
      inBasis[leave] = 0;
      inBasis[e] = 1;
      basis[blockRow] = e;

      auto& rowR = T[blockRow];
      Rat piv = rowR[e];
      if (piv != 1)
        for (int j = 0; j < total; ++j)
          if (rowR[j] != 0) rowR[j] /= piv;
      for (int i = 0; i < numRows; ++i) {
        if (i == blockRow) continue;
        Rat f = T[i][e];
        if (f == 0) continue;
        auto& rowI = T[i];
        for (int j = 0; j < total; ++j)
          if (rowR[j] != 0) rowI[j] -= f * rowR[j];
      }
    }
  }

  Rat artificialSum() const {
    Rat w = 0;
    for (int i = 0; i < numRows; ++i)
      if (basis[i] >= numStruct + numRows) w += beta[i];
    return w;
  }

  std::vector<Rat> structValues() const {
    std::vector<Rat> x(numStruct);
    for (int j = 0; j < numStruct; ++j) x[j] = rest[j];
    for (int i = 0; i < numRows; ++i)
      if (basis[i] < numStruct) x[basis[i]] = beta[i];
    return x;
  }
};

void validateProblem(const LpProblem& p) {
  if (!p.bounds.empty() &&
      p.bounds.size() != static_cast<std::size_t>(p.numVars))
    throw PreconditionError("bounds list does not match variable count");
  for (const auto& row : p.rows)
    for (const auto& [j, c] : row.coeffs) {
      (void)c;
      if (j < 1 || j > p.numVars)
        throw PreconditionError("row mentions variable x" + std::to_string(j) +
                                " outside 1.." + std::to_string(p.numVars));
    }
  for (const auto& [j, c] : p.objective) {
    (void)c;
    if (j < 1 || j > p.numVars)
      throw PreconditionError("objective mentions variable x" +
                              std::to_string(j) + " outside 1.." +
                              std::to_string(p.numVars));
  }
  validateAssignment(p.fixings, p.numVars);
}

LpOutcome solve(const LpProblem& p, bool wantOptimum) {
  validateProblem(p);
  const int n = p.numVars;
  const int m = static_cast<int>(p.rows.size());

  std::vector<VarBounds> eff(n);
  for (int j = 1; j <= n; ++j) {
    eff[j - 1] = effectiveBounds(p, j);
    const auto& e = eff[j - 1];
    if (e.lo && e.hi && *e.lo > *e.hi) {
      FarkasCertificate f;
      f.row.assign(m, Rat(0));
      f.lower.assign(n, Rat(0));
      f.upper.assign(n, Rat(0));
      f.lower[j - 1] = 1;
      f.upper[j - 1] = 1;
      f.impliedRhs = *e.lo - *e.hi;
      if (!verifyFarkas(p, f))
        throw Error("internal: bound-conflict certificate failed recheck");
      LpOutcome out;
      out.status = LpStatus::Infeasible;
      out.certificate = std::move(f);
      return out;
    }
  }

  Simplex sx;
  sx.numStruct = n;
  sx.numRows = m;
  sx.total = n + 2 * m;
  sx.col.resize(sx.total);
  sx.rest.assign(sx.total, Rat(0));
  sx.cost.assign(sx.total, Rat(0));
  sx.inBasis.assign(sx.total, 0);
  sx.basis.assign(m, -1);
  sx.beta.assign(m, Rat(0));
  sx.rhs.resize(m);
  sx.T.assign(m, std::vector<Rat>(sx.total, Rat(0)));

  for (int j = 0; j < n; ++j) {
    auto& cb = sx.col[j];
    if (eff[j].lo) {
      cb.hasLo = true;
      cb.lo = *eff[j].lo;
    }
    if (eff[j].hi) {
      cb.hasHi = true;
      cb.hi = *eff[j].hi;
    }
    sx.rest[j] = cb.hasLo ? cb.lo : (cb.hasHi ? cb.hi : Rat(0));
  }
  for (int i = 0; i < m; ++i) {
    sx.col[sx.surCol(i)].hasLo = true;  // surplus in [0, inf)
    sx.cost[sx.artCol(i)] = 1;
  }

  for (int i = 0; i < m; ++i) {
    const auto& row = p.rows[i];
    sx.rhs[i] = row.rhs;
    Rat r = row.rhs;
    for (const auto& [j, c] : row.coeffs) r -= c * sx.rest[j - 1];
    auto& tr = sx.T[i];
    auto& art = sx.col[sx.artCol(i)];
    art.hasLo = true;
    if (r > 0) {
      for (const auto& [j, c] : row.coeffs) tr[j - 1] = c;
      tr[sx.surCol(i)] = -1;
      tr[sx.artCol(i)] = 1;
      sx.basis[i] = sx.artCol(i);
      sx.beta[i] = r;
    } else {
      for (const auto& [j, c] : row.coeffs) tr[j - 1] = -c;
      tr[sx.surCol(i)] = 1;
      tr[sx.artCol(i)] = -1;
      sx.basis[i] = sx.surCol(i);
      sx.beta[i] = -r;
      art.hasHi = true;  // never needed; pin to zero
    }
    sx.inBasis[sx.basis[i]] = 1;
  }

  if (!sx.minimize())
    throw Error("internal: phase one reported unbounded");

  if (sx.artificialSum() > 0) {
    auto zb = sx.basisCosts();
    FarkasCertificate f;
    f.row.assign(m, Rat(0));
    f.lower.assign(n, Rat(0));
    f.upper.assign(n, Rat(0));
    for (int i = 0; i < m; ++i) {
      Rat y = Rat(1) - sx.reduced(zb, sx.artCol(i));
      if (sgn(y) < 0) throw Error("internal: negative row multiplier");
      f.row[i] = std::move(y);
    }
    for (int j = 0; j < n; ++j) {
      if (sx.inBasis[j]) continue;
      Rat d = sx.reduced(zb, j);
      int s = sgn(d);
      if (s > 0) {
        if (!sx.col[j].hasLo)
          throw Error("internal: lower multiplier without lower bound");
        f.lower[j] = std::move(d);
      } else if (s < 0) {
        if (!sx.col[j].hasHi)
          throw Error("internal: upper multiplier without upper bound");
        f.upper[j] = -d;
      }
    }
    f.impliedRhs = 0;
    for (int i = 0; i < m; ++i) f.impliedRhs += f.row[i] * sx.rhs[i];
    for (int j = 0; j < n; ++j) {
      if (f.lower[j] != 0) f.impliedRhs += f.lower[j] * *eff[j].lo;
      if (f.upper[j] != 0) f.impliedRhs -= f.upper[j] * *eff[j].hi;
    }
    if (!verifyFarkas(p, f))
      throw Error("internal: infeasibility certificate failed recheck");
    LpOutcome out;
    out.status = LpStatus::Infeasible;
    out.certificate = std::move(f);
    return out;
  }

  if (!wantOptimum) {
    LpOutcome out;
    out.status = LpStatus::Feasible;
    out.witness = sx.structValues();
    if (!verifyWitness(p, *out.witness))
      throw Error("internal: feasibility witness failed recheck");
    return out;
  }

  // Phase two: pin the artificials at zero and install the real objective.
  for (int i = 0; i < m; ++i) {
    auto& art = sx.col[sx.artCol(i)];
    art.hasLo = art.hasHi = true;
    art.lo = art.hi = 0;
  }
  sx.cost.assign(sx.total, Rat(0));
  for (const auto& [j, c] : p.objective)
    sx.cost[j - 1] = p.sense == LpSense::Maximize ? Rat(-c) : c;

  if (!sx.minimize()) {
    LpOutcome out;
    out.status = LpStatus::Unbounded;
    return out;
  }

  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.witness = sx.structValues();
  if (!verifyWitness(p, *out.witness))
    throw Error("internal: optimal witness failed recheck");
  Rat value = 0;
  for (const auto& [j, c] : p.objective) value += c * (*out.witness)[j - 1];
  out.value = std::move(value);
  return out;
}

}  // namespace

LpOutcome lp_feasible(const LpProblem& p) { return solve(p, false); }

LpOutcome lp_optimize(const LpProblem& p) { return solve(p, true); }

LpProblem lpFromSystem(const BinarySystem& S, const PartialAssignment& fixings) {
  LpProblem p;
  p.numVars = S.n;
  p.rows = S.rows;
  p.fixings = fixings;
  return p;
}

VarBounds effectiveBounds(const LpProblem& p, int j) {
  VarBounds b = p.bounds.empty() ? VarBounds{} : p.bounds[j - 1];
  auto it = p.fixings.bind.find(j);
  if (it != p.fixings.bind.end()) {
    Rat v(it->second);
    if (!b.lo || *b.lo < v) b.lo = v;
    if (!b.hi || *b.hi > v) b.hi = v;
  }
  return b;
}

bool verifyFarkas(const LpProblem& p, const FarkasCertificate& f) {
  const int n = p.numVars;
  if (f.row.size() != p.rows.size() ||
      f.lower.size() != static_cast<std::size_t>(n) ||
      f.upper.size() != static_cast<std::size_t>(n))
    return false;
  for (const auto& u : f.row)
    if (u < 0) return false;
  std::map<int, Rat> combined;
  Rat rhs = 0;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (f.row[i] == 0) continue;
    for (const auto& [j, c] : p.rows[i].coeffs) combined[j] += f.row[i] * c;
    rhs += f.row[i] * p.rows[i].rhs;
  }
  for (int j = 1; j <= n; ++j) {
    const Rat& lo = f.lower[j - 1];
    const Rat& up = f.upper[j - 1];
    if (lo < 0 || up < 0) return false;
    auto eff = effectiveBounds(p, j);
    if (lo != 0) {
      if (!eff.lo) return false;
      combined[j] += lo;
      rhs += lo * *eff.lo;
    }
    if (up != 0) {
      if (!eff.hi) return false;
      combined[j] -= up;
      rhs -= up * *eff.hi;
    }
  }
  for (const auto& [j, c] : combined) {
    (void)j;
    if (c != 0) return false;
  }
  return rhs > 0 && rhs == f.impliedRhs;
}

bool verifyWitness(const LpProblem& p, const std::vector<Rat>& x) {
  if (x.size() != static_cast<std::size_t>(p.numVars)) return false;
  for (int j = 1; j <= p.numVars; ++j) {
    auto eff = effectiveBounds(p, j);
    if (eff.lo && x[j - 1] < *eff.lo) return false;
    if (eff.hi && x[j - 1] > *eff.hi) return false;
  }
  for (const auto& row : p.rows)
    if (!satisfies(row, x)) return false;
  return true;
}

}  // namespace bincons
