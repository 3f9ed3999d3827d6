#include "resolution.hpp"

#include <algorithm>

namespace bincons {
namespace {

// Insert preserving the antichain: drop c if something present absorbs it,
// otherwise remove everything c absorbs and add c. Returns true if added.
bool antichainInsert(std::set<Clause>& cur, const Clause& c) {
  for (const auto& d : cur)
    if (clauseAbsorbs(d, c)) return false;
  for (auto it = cur.begin(); it != cur.end();)
    it = clauseAbsorbs(c, *it) ? cur.erase(it) : std::next(it);
  cur.insert(c);
  return true;
}

}  // namespace

ClauseSet makeClauseSet(const std::vector<Clause>& clauses) {
  std::set<Clause> cur;
  for (const auto& c : clauses) antichainInsert(cur, c);
  return ClauseSet{{cur.begin(), cur.end()}};
}

bool absorbedBy(const ClauseSet& C, const Clause& c) {
  return std::any_of(C.clauses.begin(), C.clauses.end(),
                     [&](const Clause& d) { return clauseAbsorbs(d, c); });
}

bool hasEmptyClause(const ClauseSet& C) {
  return std::any_of(C.clauses.begin(), C.clauses.end(),
                     [](const Clause& c) { return c.empty(); });
}

ClauseSet clausal_core(const BinarySystem& S) {
  std::set<Clause> cur;
  for (const auto& row : S.rows) {
    Rat M = 0;
    for (const auto& [j, c] : row.coeffs)
      if (c > 0) M += c;
    Rat threshold = M - row.rhs;
    if (threshold < 0) {
      antichainInsert(cur, Clause{});
      continue;
    }
    std::vector<std::pair<int, Rat>> support(row.coeffs.begin(),
                                             row.coeffs.end());
    std::vector<Rat> suffix(support.size() + 1, Rat(0));
    for (int i = static_cast<int>(support.size()) - 1; i >= 0; --i)
      suffix[i] = suffix[i + 1] + abs(support[i].second);
    std::vector<int> chosen;
    // Minimal subsets T with sum of |a_j| over T strictly above threshold;
    // a subset is emitted only if dropping any single member falls back to
    // or below the threshold.
    auto rec = [&](auto&& self, std::size_t idx, const Rat& sum) -> void {
      if (sum > threshold) {
        for (int t : chosen)
          if (sum - abs(row.coeffs.at(t)) > threshold) return;
        Clause c;
        for (int t : chosen)
          (row.coeffs.at(t) > 0 ? c.pos : c.neg).insert(t);
        antichainInsert(cur, c);
        return;
      }
      if (idx == support.size()) return;
      if (sum + suffix[idx] <= threshold) return;
      chosen.push_back(support[idx].first);
      self(self, idx + 1, Rat(sum + abs(support[idx].second)));
      chosen.pop_back();
      self(self, idx + 1, sum);
    };
    rec(rec, 0, Rat(0));
  }
  return ClauseSet{{cur.begin(), cur.end()}};
}

std::optional<std::pair<Clause, int>> resolvent(const Clause& c1,
                                                const Clause& c2) {
  std::vector<int> clash;
  for (int j : c1.pos)
    if (c2.neg.count(j)) clash.push_back(j);
  for (int j : c2.pos)
    if (c1.neg.count(j)) clash.push_back(j);
  if (clash.size() != 1) return std::nullopt;
  int pivot = clash[0];
  Clause r;
  auto add = [&](const std::set<int>& from, std::set<int>& to) {
    for (int j : from)
      if (j != pivot) to.insert(j);
  };
  add(c1.pos, r.pos);
  add(c2.pos, r.pos);
  add(c1.neg, r.neg);
  add(c2.neg, r.neg);
  return std::make_pair(std::move(r), pivot);
}

ClauseSet full_closure(const ClauseSet& C) {
  std::set<Clause> cur(C.clauses.begin(), C.clauses.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Clause> snap(cur.begin(), cur.end());
    for (std::size_t i = 0; i < snap.size(); ++i)
      for (std::size_t j = i + 1; j < snap.size(); ++j)
        if (auto r = resolvent(snap[i], snap[j]))
          changed |= antichainInsert(cur, r->first);
  }
  return ClauseSet{{cur.begin(), cur.end()}};
}

InputClosureResult input_closure(const ClauseSet& C) {
  InputClosureResult out;
  struct Member {
    Clause c;
    int step;
  };
  std::vector<Member> members;
  for (const auto& c : makeClauseSet(C.clauses).clauses) {
    out.proof.steps.push_back(ProofStep{c, -1, -1, 0});
    members.push_back(
        Member{c, static_cast<int>(out.proof.steps.size()) - 1});
  }
  const std::size_t axiomCount = members.size();

  auto absorbed = [&](const Clause& c) {
    return std::any_of(members.begin(), members.end(), [&](const Member& m) {
      return clauseAbsorbs(m.c, c);
    });
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ai = 0; ai < axiomCount; ++ai) {
      const ProofStep axiom = out.proof.steps[ai];
      std::vector<Member> snap = members;
      for (const auto& m : snap) {
        auto r = resolvent(axiom.clause, m.c);
        if (!r || absorbed(r->first)) continue;
        std::erase_if(members, [&](const Member& o) {
          return clauseAbsorbs(r->first, o.c);
        });
        out.proof.steps.push_back(ProofStep{r->first, static_cast<int>(ai),
                                            m.step, r->second});
        members.push_back(
            Member{r->first, static_cast<int>(out.proof.steps.size()) - 1});
        changed = true;
      }
    }
  }
  std::vector<Clause> cl;
  cl.reserve(members.size());
  for (const auto& m : members) cl.push_back(m.c);
  std::sort(cl.begin(), cl.end());
  out.closure.clauses = std::move(cl);
  return out;
}

bool has_input_proof(const ClauseSet& C, const Clause& target) {
  return absorbedBy(input_closure(C).closure, target);
}

bool verifyProofDag(const ProofDag& dag) {
  for (std::size_t i = 0; i < dag.steps.size(); ++i) {
    const auto& s = dag.steps[i];
    if (s.parent1 < 0 && s.parent2 < 0) continue;
    if (s.parent1 < 0 || s.parent2 < 0 ||
        s.parent1 >= static_cast<int>(i) || s.parent2 >= static_cast<int>(i))
      return false;
    auto r = resolvent(dag.steps[s.parent1].clause,
                       dag.steps[s.parent2].clause);
    if (!r || r->first != s.clause || r->second != s.pivot) return false;
  }
  return true;
}

BinarySystem clausesToSystem(const ClauseSet& C, int n) {
  BinarySystem S;
  S.n = n;
  for (const auto& c : C.clauses) {
    validateClause(c, n);
    S.rows.push_back(c.empty() ? LinIneq{{}, 1} : clause_to_inequality(c));
  }
  return S;
}

}  // namespace bincons
