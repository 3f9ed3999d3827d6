#include "cuts.hpp"

#include <algorithm>

namespace bincons {
namespace {

// Multipliers as an LP: u per system row, then uL and uU per variable, all
// nonnegative; for every variable the weighted column sum must equal the
// wanted direction exactly, and the objective is the combined rhs
// u*b + 0*uL - 1*uU.
LpProblem multiplierLp(const BinarySystem& S,
                       const std::map<int, Rat>& direction) {
  const int m = static_cast<int>(S.rows.size());
  const int n = S.n;
  LpProblem p;
  p.numVars = m + 2 * n;
  p.bounds.assign(p.numVars, VarBounds{Rat(0), std::nullopt});
  for (int j = 1; j <= n; ++j) {
    LinIneq ge;
    for (int i = 0; i < m; ++i) {
      auto it = S.rows[i].coeffs.find(j);
      if (it != S.rows[i].coeffs.end()) ge.coeffs[i + 1] = it->second;
    }
    ge.coeffs[m + j] += 1;
    ge.coeffs[m + n + j] -= 1;
    auto dit = direction.find(j);
    ge.rhs = dit == direction.end() ? Rat(0) : dit->second;
    LinIneq le;
    for (const auto& [v, c] : ge.coeffs) le.coeffs[v] = -c;
    le.rhs = -ge.rhs;
    p.rows.push_back(makeRow(std::move(ge.coeffs), ge.rhs));
    p.rows.push_back(makeRow(std::move(le.coeffs), le.rhs));
  }
  for (int i = 0; i < m; ++i)
    if (S.rows[i].rhs != 0) p.objective[i + 1] = S.rows[i].rhs;
  for (int j = 1; j <= n; ++j) p.objective[m + n + j] = -1;
  p.sense = LpSense::Maximize;
  return p;
}

CutCertificate certificateFromWitness(const BinarySystem& S,
                                      const std::vector<Rat>& w) {
  const int m = static_cast<int>(S.rows.size());
  const int n = S.n;
  CutCertificate cert;
  cert.row.assign(w.begin(), w.begin() + m);
  cert.lower.assign(w.begin() + m, w.begin() + m + n);
  cert.upper.assign(w.begin() + m + n, w.begin() + m + 2 * n);
  return cert;
}

void requireFeasibleRelaxation(const BinarySystem& S) {
  if (lp_feasible(lpFromSystem(S)).status != LpStatus::Feasible)
    throw PreconditionError("the [0,1] relaxation is infeasible");
}

// Every nonempty clause over variables 1..n, ordered by size, then by the
// variable subset lexicographically, then by polarity pattern with positive
// literals before negative ones at each position.
template <class F>
void forEachClause(int n, F&& f) {
  for (int s = 1; s <= n; ++s) {
    std::vector<int> sub(s);
    for (int i = 0; i < s; ++i) sub[i] = i + 1;
    while (true) {
      for (unsigned pm = 0; pm < (1u << s); ++pm) {
        Clause c;
        for (int t = 0; t < s; ++t) {
          bool negLit = (pm >> (s - 1 - t)) & 1u;
          (negLit ? c.neg : c.pos).insert(sub[t]);
        }
        f(c);
      }
      int i = s - 1;
      while (i >= 0 && sub[i] == n - (s - 1 - i)) --i;
      if (i < 0) break;
      ++sub[i];
      for (int t = i + 1; t < s; ++t) sub[t] = sub[t - 1] + 1;
    }
  }
}

}  // namespace

bool verifyCutCertificate(const BinarySystem& S, const CutCertificate& c) {
  const std::size_t m = S.rows.size();
  const std::size_t n = static_cast<std::size_t>(S.n);
  if (c.row.size() != m || c.lower.size() != n || c.upper.size() != n)
    return false;
  std::map<int, Rat> comb;
  Rat rhs = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (c.row[i] < 0) return false;
    if (c.row[i] == 0) continue;
    for (const auto& [j, a] : S.rows[i].coeffs) comb[j] += c.row[i] * a;
    rhs += c.row[i] * S.rows[i].rhs;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (c.lower[j] < 0 || c.upper[j] < 0) return false;
    int var = static_cast<int>(j) + 1;
    if (c.lower[j] != 0) comb[var] += c.lower[j];
    if (c.upper[j] != 0) {
      comb[var] -= c.upper[j];
      rhs -= c.upper[j];
    }
  }
  for (auto it = comb.begin(); it != comb.end();)
    it = it->second == 0 ? comb.erase(it) : std::next(it);
  if (comb != c.target.coeffs) return false;
  if (rhs != c.combinedRhs) return false;
  return c.target.rhs - 1 < rhs && rhs <= c.target.rhs;
}

CgTestResult is_cg_cut(const BinarySystem& S, const Clause& c) {
  validateClause(c, S.n);
  if (c.empty())
    throw PreconditionError("clause must be nonempty");
  requireFeasibleRelaxation(S);

  LinIneq target = clause_to_inequality(c);
  auto out = lp_optimize(multiplierLp(S, target.coeffs));
  CgTestResult res;
  if (out.status == LpStatus::Infeasible) {
    res.outcome = CgOutcome::NoSurrogate;
    return res;
  }
  if (out.status != LpStatus::Optimal)
    throw Error("internal: multiplier optimum missing for feasible relaxation");
  res.bestRhs = out.value;
  if (*out.value <= target.rhs - 1) {
    res.outcome = CgOutcome::TooWeak;
    return res;
  }

  CutCertificate cert = certificateFromWitness(S, *out.witness);
  cert.target = std::move(target);
  Rat val = *out.value;
  if (val > cert.target.rhs) {
    // Equal extra weight on x_1 >= 0 and -x_1 >= -1 cancels in the
    // coefficients and lowers the combined rhs onto the clause rhs.
    Rat eps = val - cert.target.rhs;
    cert.lower[0] += eps;
    cert.upper[0] += eps;
    val = cert.target.rhs;
  }
  cert.combinedRhs = std::move(val);
  if (!verifyCutCertificate(S, cert))
    throw Error("internal: cut certificate failed recheck");
  res.outcome = CgOutcome::Certified;
  res.certificate = std::move(cert);
  return res;
}

DerivedCut derive_cg_cut(const BinarySystem& S, const PartialAssignment& a) {
  validateAssignment(a, S.n);
  requireFeasibleRelaxation(S);
  if (lp_feasible(lpFromSystem(S, a)).status == LpStatus::Feasible)
    throw PreconditionError("assignment is consistent with the relaxation");

  std::map<int, Rat> d;
  long ones = 0;
  for (const auto& [j, v] : a.bind) {
    d[j] = v ? Rat(-1) : Rat(1);
    if (v) ++ones;
  }
  auto out = lp_optimize(multiplierLp(S, d));
  if (out.status != LpStatus::Optimal)
    throw Error("internal: surrogate optimum missing");

  const Rat& pi0 = *out.value;
  Rat pi = pi0 + Rat(ones);
  if (pi <= 0 || pi > Rat(static_cast<long>(a.bind.size())))
    throw Error("internal: clause-sum minimum out of range");
  long hat = ratCeil(pi).get_si() - 1;

  SeparationTrace trace;
  trace.surrogate = makeRow(d, pi0);
  trace.clauseSum = pi;
  CutCertificate cert = certificateFromWitness(S, *out.witness);
  long droppedZeros = 0;
  {
    long left = hat;
    for (const auto& [j, v] : a.bind) {
      if (left-- <= 0) {
        (v ? trace.cut.neg : trace.cut.pos).insert(j);
      } else {
        trace.dropped.insert(j);
        if (v) {
          cert.lower[j - 1] += 1;
        } else {
          cert.upper[j - 1] += 1;
          ++droppedZeros;
        }
      }
    }
  }
  cert.target = clause_to_inequality(trace.cut);
  cert.combinedRhs = pi0 - Rat(droppedZeros);
  if (!verifyCutCertificate(S, cert))
    throw Error("internal: separation certificate failed recheck");
  if (!clauseFalsified(trace.cut, a))
    throw Error("internal: separated cut not violated by the assignment");

  DerivedCut dc;
  dc.cut = trace.cut;
  dc.certificate = std::move(cert);
  dc.trace = std::move(trace);
  return dc;
}

ConsistencyReport lp_consistency_via_cg(const BinarySystem& S,
                                        const OracleLimits& lim) {
  ConsistencyReport rep;
  rep.property = Property::LPConsistent;
  FeasibleSet F = enumerate_feasible(S, lim);

  if (F.points.empty()) {
    // Nothing is feasible: LP-consistency holds exactly when the relaxation
    // is infeasible too, and otherwise the empty assignment is the witness.
    bool relaxFeasible =
        lp_feasible(lpFromSystem(S)).status == LpStatus::Feasible;
    rep.verdict = !relaxFeasible;
    if (!rep.verdict) rep.witness = PartialAssignment{};
    return rep;
  }

  auto impliedByF = [&](const Clause& c) {
    return std::all_of(F.points.begin(), F.points.end(),
                       [&](const std::vector<int>& p) {
                         return clauseSatisfied(c, p);
                       });
  };

  std::vector<Clause> primes;
  forEachClause(S.n, [&](const Clause& c) {
    bool absorbed =
        std::any_of(primes.begin(), primes.end(), [&](const Clause& d) {
          return clauseAbsorbs(d, c);
        });
    if (!absorbed && impliedByF(c)) primes.push_back(c);
  });

  for (const auto& c : primes) {
    auto r = is_cg_cut(S, c);
    if (r.outcome == CgOutcome::Certified) continue;
    rep.verdict = false;
    rep.witness = falsifier(c);
    if (!consistent_with(S, *rep.witness, Relaxation::LP, lim) ||
        extendsToFeasible(F, *rep.witness))
      throw Error("internal: cut-based witness failed recheck");
    break;
  }
  return rep;
}

EquivalenceReport cut_proof_equivalence(const BinarySystem& S, int smallCap) {
  if (S.n > smallCap)
    throw CapError("clause scan over " + std::to_string(S.n) +
                   " variables exceeds cap " + std::to_string(smallCap));
  ClauseSet SC = clausal_core(S);
  ClauseSet closure = input_closure(SC).closure;
  BinarySystem sys = clausesToSystem(SC, S.n);
  const bool relaxFeasible =
      lp_feasible(lpFromSystem(sys)).status == LpStatus::Feasible;

  EquivalenceReport rep;
  forEachClause(S.n, [&](const Clause& c) {
    bool ip = absorbedBy(closure, c);
    // An infeasible relaxation admits every cut.
    bool cg = relaxFeasible
                  ? is_cg_cut(sys, c).outcome == CgOutcome::Certified
                  : true;
    ++rep.clausesChecked;
    if (ip != cg)
      rep.discrepancies.push_back(clauseStr(c) + ": cut=" +
                                  (cg ? "yes" : "no") +
                                  " proof=" + (ip ? "yes" : "no"));
  });
  return rep;
}

}  // namespace bincons
