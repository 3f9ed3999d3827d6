#include "modelfile.hpp"

#include <cctype>
#include <sstream>

namespace bincons {

ParseError::ParseError(const std::string& msg, int line, int col)
    : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
            ": " + msg),
      line(line),
      col(col) {}

namespace {

struct Scan {
  const std::string& s;
  int lineNo;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    ws();
    return i >= s.size();
  }
  char peek() const { return i < s.size() ? s[i] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, lineNo, static_cast<int>(i) + 1);
  }

  bool atDigit() const {
    return std::isdigit(static_cast<unsigned char>(peek()));
  }

  long integer(const char* what) {
    ws();
    if (!atDigit()) fail(std::string("expected ") + what);
    std::size_t start = i;
    while (atDigit()) ++i;
    if (i - start > 7) fail(std::string(what) + " too large");
    return std::stol(s.substr(start, i - start));
  }

  Rat rational() {
    ws();
    std::size_t start = i;
    while (atDigit()) ++i;
    if (i == start) fail("expected a number");
    if (peek() == '/') {
      ++i;
      std::size_t den = i;
      while (atDigit()) ++i;
      if (i == den) fail("expected a denominator");
    }
    auto r = parseRat(std::string_view(s).substr(start, i - start));
    if (!r) fail("malformed rational");
    return *r;
  }

  // -1 = <=, 0 = '=', 1 = >=; no movement and nullopt when not at a sense
  std::optional<int> sense() {
    ws();
    if (peek() == '>' || peek() == '<') {
      if (i + 1 >= s.size() || s[i + 1] != '=') fail("expected <= or >=");
      int r = peek() == '>' ? 1 : -1;
      i += 2;
      return r;
    }
    if (peek() == '=') {
      ++i;
      return 0;
    }
    return std::nullopt;
  }

  // terms until a sense token (constraints) or end of line (objectives)
  std::map<int, Rat> linearSum(int n, bool untilSense, std::optional<int>& out) {
    std::map<int, Rat> coeffs;
    bool first = true;
    for (;;) {
      if (done()) {
        if (untilSense) fail("expected <=, >= or =");
        if (first) fail("expected a term");
        break;
      }
      if (untilSense) {
        std::size_t mark = i;
        out = sense();
        if (out) {
          if (first) fail("expected a term before the relation");
          break;
        }
        i = mark;
      }
      int sign = 1;
      if (peek() == '+') {
        ++i;
      } else if (peek() == '-') {
        sign = -1;
        ++i;
      } else if (!first) {
        fail("expected + or - between terms");
      }
      ws();
      Rat coef = 1;
      if (atDigit()) {
        coef = rational();
        if (first && sign == 1) {
          // a lone 0 may stand for an empty sum on either side
          if (untilSense) {
            std::size_t mark = i;
            out = sense();
            if (out) {
              if (coef != 0) fail("constant left-hand side must be 0");
              return coeffs;
            }
            i = mark;
          } else {
            ws();
            if (done()) {
              if (coef != 0) fail("constant objective must be 0");
              return coeffs;
            }
          }
        }
        ws();
      }
      if (peek() != 'x') fail("expected a variable like x1");
      ++i;
      long idx = integer("variable index");
      if (idx < 1 || idx > n)
        fail("variable index out of range 1.." + std::to_string(n));
      coeffs[static_cast<int>(idx)] += sign * coef;
      first = false;
    }
    return coeffs;
  }

  Rat signedRational() {
    ws();
    int sign = 1;
    if (peek() == '+') {
      ++i;
    } else if (peek() == '-') {
      sign = -1;
      ++i;
    }
    return sign * rational();
  }

  void expectEnd() {
    if (!done()) fail("unexpected trailing text");
  }
};

std::string word(Scan& sc) {
  sc.ws();
  std::size_t start = sc.i;
  while (std::isalpha(static_cast<unsigned char>(sc.peek()))) ++sc.i;
  return sc.s.substr(start, sc.i - start);
}

}  // namespace

ParsedModel parse_model(const std::string& text) {
  ParsedModel m;
  bool haveVars = false;
  int lineNo = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineNo;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    while (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Scan sc{raw, lineNo};
    if (sc.done()) continue;

    if (!haveVars) {
      if (word(sc) != "vars") sc.fail("expected the vars header");
      long n = sc.integer("variable count");
      sc.expectEnd();
      if (n < 1 || n > 1000000) sc.fail("variable count out of range");
      m.system.n = static_cast<int>(n);
      haveVars = true;
      continue;
    }

    std::size_t mark = sc.i;
    std::string kw = word(sc);
    if (kw == "vars") sc.fail("duplicate vars header");
    if (kw == "max" || kw == "min") {
      if (m.hasObjective) sc.fail("duplicate objective");
      std::optional<int> none;
      m.objective = sc.linearSum(m.system.n, false, none);
      sc.expectEnd();
      for (auto it = m.objective.begin(); it != m.objective.end();)
        it = it->second == 0 ? m.objective.erase(it) : std::next(it);
      m.sense = kw == "max" ? LpSense::Maximize : LpSense::Minimize;
      m.hasObjective = true;
      continue;
    }
    sc.i = mark;

    std::optional<int> rel;
    std::map<int, Rat> coeffs = sc.linearSum(m.system.n, true, rel);
    Rat rhs = sc.signedRational();
    sc.expectEnd();
    if (*rel >= 0) m.system.rows.push_back(makeRow(coeffs, rhs));
    if (*rel <= 0) {
      std::map<int, Rat> neg;
      for (const auto& [j, c] : coeffs) neg[j] = -c;
      m.system.rows.push_back(makeRow(std::move(neg), -rhs));
    }
  }
  if (!haveVars) throw ParseError("expected the vars header", lineNo + 1, 1);
  return m;
}

std::string print_model(const ParsedModel& m) {
  std::ostringstream out;
  out << "vars " << m.system.n << "\n";
  for (const auto& r : m.system.rows) out << ineqStr(r) << "\n";
  if (m.hasObjective)
    out << (m.sense == LpSense::Maximize ? "max " : "min ")
        << linStr(m.objective) << "\n";
  return out.str();
}

}  // namespace bincons
