#include "model.hpp"

#include <algorithm>
#include <sstream>

namespace bincons {

LinIneq makeRow(std::map<int, Rat> coeffs, Rat rhs) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->first < 1)
      throw PreconditionError("variable index must be positive: " +
                              std::to_string(it->first));
    if (it->second == 0)
      it = coeffs.erase(it);
    else
      ++it;
  }
  return LinIneq{std::move(coeffs), std::move(rhs)};
}

std::vector<LinIneq> boxRows(int n) {
  std::vector<LinIneq> rows;
  rows.reserve(2 * n);
  for (int j = 1; j <= n; ++j) rows.push_back(LinIneq{{{j, 1}}, 0});
  for (int j = 1; j <= n; ++j) rows.push_back(LinIneq{{{j, -1}}, -1});
  return rows;
}

bool ineqLess(const LinIneq& a, const LinIneq& b) {
  auto ia = a.coeffs.begin();
  auto ib = b.coeffs.begin();
  for (; ia != a.coeffs.end() && ib != b.coeffs.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  if (ia != a.coeffs.end()) return false;
  if (ib != b.coeffs.end()) return true;
  return cmp(a.rhs, b.rhs) < 0;
}

Rat evaluate(const LinIneq& a, const std::vector<Rat>& p) {
  Rat sum = 0;
  for (const auto& [j, c] : a.coeffs) {
    if (j < 1 || static_cast<std::size_t>(j) > p.size())
      throw PreconditionError("point does not cover variable x" +
                              std::to_string(j));
    sum += c * p[j - 1];
  }
  return sum;
}

bool satisfies(const LinIneq& a, const std::vector<Rat>& p) {
  return evaluate(a, p) >= a.rhs;
}

std::vector<Rat> toRatPoint(const std::vector<int>& p) {
  std::vector<Rat> q;
  q.reserve(p.size());
  for (int v : p) q.emplace_back(v);
  return q;
}

bool satisfiesAll(const BinarySystem& S, const std::vector<int>& p) {
  auto q = toRatPoint(p);
  for (const auto& row : S.rows)
    if (!satisfies(row, q)) return false;
  return true;
}

LinIneq clause_to_inequality(const Clause& c) {
  if (c.empty())
    throw PreconditionError("empty clause has no inequality form");
  LinIneq out;
  for (int j : c.pos) out.coeffs[j] = 1;
  for (int j : c.neg) out.coeffs[j] = -1;
  out.rhs = Rat(1) - Rat(static_cast<long>(c.neg.size()));
  return out;
}

bool inequality_implies_clause(const LinIneq& a, const Clause& c) {
  // Maximize the left side over points with every literal of c false:
  // x_j = 0 on c.pos, x_j = 1 on c.neg, free otherwise.
  Rat best = 0;
  for (const auto& [j, coef] : a.coeffs) {
    if (c.pos.count(j)) continue;
    if (c.neg.count(j))
      best += coef;
    else if (coef > 0)
      best += coef;
  }
  return best < a.rhs;
}

bool clauseAbsorbs(const Clause& small, const Clause& big) {
  return std::includes(big.pos.begin(), big.pos.end(), small.pos.begin(),
                       small.pos.end()) &&
         std::includes(big.neg.begin(), big.neg.end(), small.neg.begin(),
                       small.neg.end());
}

bool clauseSatisfied(const Clause& c, const std::vector<int>& p) {
  for (int j : c.pos)
    if (p[j - 1] == 1) return true;
  for (int j : c.neg)
    if (p[j - 1] == 0) return true;
  return false;
}

bool clauseFalsified(const Clause& c, const PartialAssignment& a) {
  for (int j : c.pos) {
    auto it = a.bind.find(j);
    if (it == a.bind.end() || it->second != 0) return false;
  }
  for (int j : c.neg) {
    auto it = a.bind.find(j);
    if (it == a.bind.end() || it->second != 1) return false;
  }
  return true;
}

PartialAssignment falsifier(const Clause& c) {
  PartialAssignment a;
  for (int j : c.pos) a.bind[j] = 0;
  for (int j : c.neg) a.bind[j] = 1;
  return a;
}

void validateAssignment(const PartialAssignment& a, int n) {
  for (const auto& [j, v] : a.bind) {
    if (j < 1 || j > n)
      throw PreconditionError("assignment mentions variable x" +
                              std::to_string(j) + " outside 1.." +
                              std::to_string(n));
    if (v != 0 && v != 1)
      throw PreconditionError("assignment value for x" + std::to_string(j) +
                              " is not 0/1");
  }
}

void validateClause(const Clause& c, int n) {
  for (int j : c.pos)
    if (c.neg.count(j))
      throw PreconditionError("clause uses x" + std::to_string(j) +
                              " in both polarities");
  for (const auto* side : {&c.pos, &c.neg})
    for (int j : *side)
      if (j < 1 || j > n)
        throw PreconditionError("clause mentions variable x" +
                                std::to_string(j) + " outside 1.." +
                                std::to_string(n));
}

namespace {

void appendTerm(std::ostringstream& out, bool first, const Rat& coef, int var) {
  Rat mag = abs(coef);
  if (first) {
    if (coef < 0) out << "-";
  } else {
    out << (coef < 0 ? " - " : " + ");
  }
  if (mag != 1) out << ratStr(mag) << " ";
  out << "x" << var;
}

}  // namespace

std::string linStr(const std::map<int, Rat>& coeffs) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [j, c] : coeffs) {
    appendTerm(out, first, c, j);
    first = false;
  }
  return out.str();
}

std::string ineqStr(const LinIneq& a) {
  return linStr(a.coeffs) + " >= " + ratStr(a.rhs);
}

std::string clauseStr(const Clause& c) {
  if (c.empty()) return "<empty>";
  std::ostringstream out;
  bool first = true;
  for (int j : c.pos) {
    if (!first) out << " v ";
    out << "x" << j;
    first = false;
  }
  for (int j : c.neg) {
    if (!first) out << " v ";
    out << "~x" << j;
    first = false;
  }
  return out.str();
}

std::string paStr(const PartialAssignment& a) {
  if (a.bind.empty()) return "{}";
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [j, v] : a.bind) {
    if (!first) out << ", ";
    out << "x" << j << "=" << v;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string pointStr(const std::vector<Rat>& p) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ", ";
    out << ratStr(p[i]);
  }
  out << ")";
  return out.str();
}

std::string pointStr(const std::vector<int>& p) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ", ";
    out << p[i];
  }
  out << ")";
  return out.str();
}

}  // namespace bincons
