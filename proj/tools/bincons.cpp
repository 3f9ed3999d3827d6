#include <bincons.h>

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int exitCodeFor(bincons_status st) {
  switch (st) {
    case BINCONS_OK:
      return 0;
    case BINCONS_FALSE:
      return 1;
    case BINCONS_ERR_PARSE:
    case BINCONS_ERR_USAGE:
    case BINCONS_ERR_CAP:
      return 2;
    case BINCONS_ERR_INTERNAL:
      return 3;
  }
  return 3;
}

bool readInput(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact consistency analysis for 0-1 linear systems"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "base seed for randomized suites")
      ->capture_default_str();
  int cap = 22;
  app.add_option("--cap", cap,
                 "largest variable count enumeration oracles accept")
      ->envname("BINCONS_ENUM_CAP")
      ->capture_default_str();

  std::string file;
  std::string property;
  std::string closureMode = "full";
  std::string clause;
  std::string assign;
  std::string lnpMode = "prefix";
  std::string order;
  std::string valueOrder = "zero";
  std::string prune = "rows";
  std::string bnbPrune = "rows";
  std::string rootCuts;
  std::string suite;
  int k = 1;
  int seeds = 50;

  const char* fileHelp = "model file, or - for stdin";

  CLI::App* cCheck = app.add_subcommand("check", "decide a consistency property");
  cCheck->add_option("file", file, fileHelp)->required();
  cCheck->add_option("--property", property,
                     "consistent | domain | k:<k> | strong-k:<k> | seq-k:<k> "
                     "| lp | seq-lp-k:<k>")
      ->required();

  CLI::App* cClosure =
      app.add_subcommand("closure", "resolve the clausal core to closure");
  cClosure->add_option("file", file, fileHelp)->required();
  cClosure->add_option("--mode", closureMode, "full | input")
      ->check(CLI::IsMember({"full", "input"}))
      ->capture_default_str();

  CLI::App* cCutTest = app.add_subcommand(
      "cut-test", "test a clause for a one-round rounding certificate");
  cCutTest->add_option("file", file, fileHelp)->required();
  cCutTest->add_option("--clause", clause, "literals, e.g. \"x1 -x2\"")
      ->required();

  CLI::App* cCutDerive = app.add_subcommand(
      "cut-derive", "separate an assignment the relaxation rejects");
  cCutDerive->add_option("file", file, fileHelp)->required();
  cCutDerive->add_option("--assign", assign, "e.g. \"x1=0,x3=0\"")->required();

  CLI::App* cLnp = app.add_subcommand(
      "lnp", "augment with lift-and-project rows at level k");
  cLnp->add_option("file", file, fileHelp)->required();
  cLnp->add_option("--k", k, "lifting level")->required();
  cLnp->add_option("--mode", lnpMode, "prefix | product")
      ->check(CLI::IsMember({"prefix", "product"}))
      ->capture_default_str();

  CLI::App* cSearch =
      app.add_subcommand("search", "depth-first feasibility search");
  cSearch->add_option("file", file, fileHelp)->required();
  cSearch->add_option("--prune", prune, "rows | lp")
      ->check(CLI::IsMember({"rows", "lp"}))
      ->required();
  cSearch->add_option("--order", order, "branch order, e.g. 2,1,3");
  cSearch->add_option("--value-order", valueOrder, "zero | one | lp")
      ->check(CLI::IsMember({"zero", "one", "lp"}))
      ->capture_default_str();

  CLI::App* cBnb = app.add_subcommand("bnb", "branch and bound on the objective");
  cBnb->add_option("file", file, fileHelp)->required();
  cBnb->add_option("--root-cuts", rootCuts,
                   "variables to cut on at the root, e.g. x1,x2");
  cBnb->add_option("--prune", bnbPrune, "rows | lp")
      ->check(CLI::IsMember({"rows", "lp"}))
      ->capture_default_str();

  CLI::App* cVerify =
      app.add_subcommand("verify", "replay a library guarantee on random instances");
  cVerify->add_option("--suite", suite,
                      "projection | closure | cut-proof | cut-characterization "
                      "| implied-cuts | sequential-lift | no-backtrack | all")
      ->required();
  cVerify->add_option("--seeds", seeds, "instances to run")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  bincons_options* opt = bincons_options_new();
  bincons_options_set_enum_cap(opt, cap);
  bincons_options_set_seed(opt, seed);
  bincons_options_set_seed_count(opt, seeds);

  bincons_model* model = nullptr;
  if (!cVerify->parsed()) {
    std::string text;
    if (!readInput(file, text)) {
      bincons_options_free(opt);
      return 2;
    }
    char* errmsg = nullptr;
    if (bincons_model_parse(text.c_str(), &model, &errmsg) != BINCONS_OK) {
      std::cerr << "error: " << (errmsg ? errmsg : "cannot parse model")
                << "\n";
      bincons_str_free(errmsg);
      bincons_options_free(opt);
      return 2;
    }
  }

  bincons_report* report = nullptr;
  bincons_status st = BINCONS_ERR_INTERNAL;
  if (cCheck->parsed())
    st = bincons_check(model, property.c_str(), opt, &report);
  else if (cClosure->parsed())
    st = bincons_closure(model, closureMode.c_str(), opt, &report);
  else if (cCutTest->parsed())
    st = bincons_cut_test(model, clause.c_str(), opt, &report);
  else if (cCutDerive->parsed())
    st = bincons_cut_derive(model, assign.c_str(), opt, &report);
  else if (cLnp->parsed())
    st = bincons_lift_project(model, k, lnpMode.c_str(), opt, &report);
  else if (cSearch->parsed())
    st = bincons_search(model, prune.c_str(),
                        order.empty() ? nullptr : order.c_str(),
                        valueOrder.c_str(), opt, &report);
  else if (cBnb->parsed())
    st = bincons_bnb(model, rootCuts.empty() ? nullptr : rootCuts.c_str(),
                     bnbPrune.c_str(), opt, &report);
  else if (cVerify->parsed())
    st = bincons_verify(suite.c_str(), opt, &report);

  int code = exitCodeFor(st);
  if (report) {
    char* rendered = bincons_report_render(report, format.c_str());
    if (rendered) {
      std::fputs(rendered, stdout);
      bincons_str_free(rendered);
    }
    bincons_report_free(report);
  } else if (code >= 2) {
    std::cerr << "error: " << bincons_last_error() << "\n";
  }

  bincons_model_free(model);
  bincons_options_free(opt);
  return code;
}
