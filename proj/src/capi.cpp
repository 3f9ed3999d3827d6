#include "bincons.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "commands.hpp"

struct bincons_model {
  bincons::ParsedModel m;
};
struct bincons_report {
  bincons::CommandResult r;
};
struct bincons_options {
  bincons::CommandOptions o;
};

namespace {

thread_local std::string g_lastError;

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bincons::CommandOptions optionsOf(const bincons_options* opt) {
  return opt ? opt->o : bincons::CommandOptions{};
}

std::string stringOr(const char* s, const char* fallback) {
  return s ? s : fallback;
}

template <class F>
bincons_status runCommand(bincons_report** out, F&& f) {
  if (!out) {
    g_lastError = "null output pointer";
    return BINCONS_ERR_USAGE;
  }
  *out = nullptr;
  g_lastError.clear();
  try {
    bincons::CommandResult r = f();
    bincons_status st = r.verdict == 0 ? BINCONS_OK : BINCONS_FALSE;
    *out = new bincons_report{std::move(r)};
    return st;
  } catch (const bincons::ParseError& e) {
    g_lastError = e.what();
    return BINCONS_ERR_PARSE;
  } catch (const bincons::CapError& e) {
    g_lastError = e.what();
    return BINCONS_ERR_CAP;
  } catch (const bincons::UsageError& e) {
    g_lastError = e.what();
    return BINCONS_ERR_USAGE;
  } catch (const bincons::PreconditionError& e) {
    g_lastError = e.what();
    return BINCONS_ERR_USAGE;
  } catch (const std::exception& e) {
    g_lastError = e.what();
    return BINCONS_ERR_INTERNAL;
  }
}

bincons_status argError(bincons_report** out, const char* what) {
  if (out) *out = nullptr;
  g_lastError = std::string("null ") + what;
  return BINCONS_ERR_USAGE;
}

}  // namespace

extern "C" {

const char* bincons_last_error(void) { return g_lastError.c_str(); }

bincons_options* bincons_options_new(void) { return new bincons_options{}; }

void bincons_options_free(bincons_options* opt) { delete opt; }

void bincons_options_set_enum_cap(bincons_options* opt, int cap) {
  if (opt) opt->o.enumCap = cap;
}

void bincons_options_set_seed(bincons_options* opt, uint64_t seed) {
  if (opt) opt->o.seed = seed;
}

void bincons_options_set_seed_count(bincons_options* opt, int count) {
  if (opt) opt->o.seedCount = count;
}

bincons_status bincons_model_parse(const char* text, bincons_model** out,
                                   char** errmsg) {
  if (errmsg) *errmsg = nullptr;
  if (!text || !out) {
    g_lastError = "null argument";
    return BINCONS_ERR_USAGE;
  }
  *out = nullptr;
  g_lastError.clear();
  try {
    *out = new bincons_model{bincons::parse_model(text)};
    return BINCONS_OK;
  } catch (const bincons::ParseError& e) {
    g_lastError = e.what();
    if (errmsg) *errmsg = dupString(e.what());
    return BINCONS_ERR_PARSE;
  } catch (const std::exception& e) {
    g_lastError = e.what();
    return BINCONS_ERR_INTERNAL;
  }
}

void bincons_model_free(bincons_model* m) { delete m; }

void bincons_str_free(char* s) { std::free(s); }

bincons_status bincons_check(const bincons_model* m, const char* property,
                             const bincons_options* opt,
                             bincons_report** out) {
  if (!m) return argError(out, "model");
  if (!property) return argError(out, "property");
  return runCommand(out, [&] {
    return bincons::cmdCheck(m->m, property, optionsOf(opt));
  });
}

bincons_status bincons_closure(const bincons_model* m, const char* mode,
                               const bincons_options* opt,
                               bincons_report** out) {
  if (!m) return argError(out, "model");
  return runCommand(out, [&] {
    return bincons::cmdClosure(m->m, stringOr(mode, "full"), optionsOf(opt));
  });
}

bincons_status bincons_cut_test(const bincons_model* m, const char* clause,
                                const bincons_options* opt,
                                bincons_report** out) {
  if (!m) return argError(out, "model");
  if (!clause) return argError(out, "clause");
  return runCommand(out, [&] {
    return bincons::cmdCutTest(m->m, clause, optionsOf(opt));
  });
}

bincons_status bincons_cut_derive(const bincons_model* m,
                                  const char* assignment,
                                  const bincons_options* opt,
                                  bincons_report** out) {
  if (!m) return argError(out, "model");
  if (!assignment) return argError(out, "assignment");
  return runCommand(out, [&] {
    return bincons::cmdCutDerive(m->m, assignment, optionsOf(opt));
  });
}

bincons_status bincons_lift_project(const bincons_model* m, int k,
                                    const char* mode,
                                    const bincons_options* opt,
                                    bincons_report** out) {
  if (!m) return argError(out, "model");
  return runCommand(out, [&] {
    return bincons::cmdLnp(m->m, k, stringOr(mode, "prefix"), optionsOf(opt));
  });
}

bincons_status bincons_search(const bincons_model* m, const char* prune,
                              const char* order, const char* value_order,
                              const bincons_options* opt,
                              bincons_report** out) {
  if (!m) return argError(out, "model");
  return runCommand(out, [&] {
    return bincons::cmdSearch(m->m, stringOr(prune, "rows"),
                              stringOr(order, ""),
                              stringOr(value_order, "zero"), optionsOf(opt));
  });
}

bincons_status bincons_bnb(const bincons_model* m, const char* root_cuts,
                           const char* prune, const bincons_options* opt,
                           bincons_report** out) {
  if (!m) return argError(out, "model");
  return runCommand(out, [&] {
    return bincons::cmdBnb(m->m, stringOr(root_cuts, ""),
                           stringOr(prune, "rows"), optionsOf(opt));
  });
}

bincons_status bincons_verify(const char* suite, const bincons_options* opt,
                              bincons_report** out) {
  if (!suite) return argError(out, "suite");
  return runCommand(
      out, [&] { return bincons::cmdVerify(suite, optionsOf(opt)); });
}

int bincons_report_verdict(const bincons_report* r) {
  return r && r->r.verdict == 0 ? 1 : 0;
}

char* bincons_report_render(const bincons_report* r, const char* format) {
  if (!r || !format) return nullptr;
  std::string f = format;
  if (f == "text") return dupString(r->r.report.renderText());
  if (f == "json") return dupString(r->r.report.renderJson());
  return nullptr;
}

void bincons_report_free(bincons_report* r) { delete r; }

const char* bincons_version(void) { return "0.1.0"; }

}  // extern "C"
