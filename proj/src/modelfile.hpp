#pragma once

#include <string>

#include "lp.hpp"
#include "model.hpp"

namespace bincons {

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line, int col);
};

struct ParsedModel {
  BinarySystem system;
  std::map<int, Rat> objective;
  LpSense sense = LpSense::Maximize;
  bool hasObjective = false;
};

// Grammar, line oriented, '#' starts a comment:
//   vars <n>
//   <term> {(+|-) <term>} (<=|>=|=) [+|-]<rational>      constraint
//   0 (<=|>=|=) [+|-]<rational>                          constant row
//   (max|min) <term> {(+|-) <term>}                      at most once
//   (max|min) 0                                          constant objective
// where <term> is [<rational>] x<index> and <rational> is p or p/q.
// '=' expands into the two one-sided rows.
ParsedModel parse_model(const std::string& text);

// Canonical text that parses back to an identical model.
std::string print_model(const ParsedModel& m);

}  // namespace bincons
