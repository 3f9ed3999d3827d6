#ifndef BINCONS_H
#define BINCONS_H

/* C interface to the bincons library. All analyses run in exact rational
 * arithmetic; results come back as report objects renderable as text or
 * JSON. Strings returned through char** or from bincons_report_render are
 * heap-allocated and must be released with bincons_str_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BINCONS_OK = 0,            /* verdict true / command succeeded */
  BINCONS_FALSE = 1,         /* verdict false; report carries the witness */
  BINCONS_ERR_PARSE = 2,     /* malformed model text */
  BINCONS_ERR_USAGE = 3,     /* bad option string or argument */
  BINCONS_ERR_CAP = 4,       /* instance exceeds an enumeration cap */
  BINCONS_ERR_INTERNAL = 5   /* invariant failure inside the library */
} bincons_status;

typedef struct bincons_model bincons_model;
typedef struct bincons_report bincons_report;
typedef struct bincons_options bincons_options;

/* Message for the most recent failure on this thread; empty string when the
 * last call succeeded. The pointer stays valid until the next call. */
const char* bincons_last_error(void);

bincons_options* bincons_options_new(void);
void bincons_options_free(bincons_options* opt);
void bincons_options_set_enum_cap(bincons_options* opt, int cap);
void bincons_options_set_seed(bincons_options* opt, uint64_t seed);
void bincons_options_set_seed_count(bincons_options* opt, int count);

/* Parses model text:
 *   vars <n>
 *   2 x1 + 4 x2 >= 1        (senses <=, >=, =; rationals like 3/4)
 *   max 3 x2 - 1 x1         (optional objective, max or min)
 *   # comment
 * On failure returns BINCONS_ERR_PARSE and, when errmsg is non-NULL, stores
 * a position-annotated message there. */
bincons_status bincons_model_parse(const char* text, bincons_model** out,
                                   char** errmsg);
void bincons_model_free(bincons_model* m);
void bincons_str_free(char* s);

/* Commands. opt may be NULL for defaults. Each stores a report in *out on
 * BINCONS_OK and BINCONS_FALSE; *out is NULL on error statuses. */

/* property: consistent | domain | k:<k> | strong-k:<k> | seq-k:<k> | lp |
 * seq-lp-k:<k> */
bincons_status bincons_check(const bincons_model* m, const char* property,
                             const bincons_options* opt, bincons_report** out);

/* mode: full | input */
bincons_status bincons_closure(const bincons_model* m, const char* mode,
                               const bincons_options* opt,
                               bincons_report** out);

/* clause: literals like "x1 x3" or "x1 -x2" (~x2 also accepted) */
bincons_status bincons_cut_test(const bincons_model* m, const char* clause,
                                const bincons_options* opt,
                                bincons_report** out);

/* assignment: "x1=0,x3=1"; BINCONS_FALSE when nothing separates it */
bincons_status bincons_cut_derive(const bincons_model* m,
                                  const char* assignment,
                                  const bincons_options* opt,
                                  bincons_report** out);

/* mode: prefix | product (NULL = prefix) */
bincons_status bincons_lift_project(const bincons_model* m, int k,
                                    const char* mode,
                                    const bincons_options* opt,
                                    bincons_report** out);

/* prune: rows | lp (NULL = rows); order: "2,1,3" (NULL = index order);
 * value_order: zero | one | lp (NULL = zero) */
bincons_status bincons_search(const bincons_model* m, const char* prune,
                              const char* order, const char* value_order,
                              const bincons_options* opt,
                              bincons_report** out);

/* root_cuts: "x1,x2" (NULL = none); prune as in bincons_search */
bincons_status bincons_bnb(const bincons_model* m, const char* root_cuts,
                           const char* prune, const bincons_options* opt,
                           bincons_report** out);

/* suite: projection | closure | cut-proof | cut-characterization |
 * implied-cuts | sequential-lift | no-backtrack | all */
bincons_status bincons_verify(const char* suite, const bincons_options* opt,
                              bincons_report** out);

/* 1 = verdict true / success, 0 = verdict false */
int bincons_report_verdict(const bincons_report* r);
/* format: "text" | "json"; NULL on bad arguments */
char* bincons_report_render(const bincons_report* r, const char* format);
void bincons_report_free(bincons_report* r);

const char* bincons_version(void);

#ifdef __cplusplus
}
#endif

#endif
