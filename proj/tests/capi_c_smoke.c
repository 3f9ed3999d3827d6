/* Exercises the shared library from plain C. */

#include <stdio.h>
#include <string.h>

#include "bincons.h"

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    fprintf(stderr, "FAIL: %s\n", what);
    failures++;
  }
}

int main(void) {
  const char* text =
      "vars 4\n"
      "x1 + x2 + x4 >= 1\n"
      "x1 - x2 + x3 >= 0\n"
      "x1 - x4 >= 0\n";

  bincons_model* m = NULL;
  char* err = NULL;
  expect(bincons_model_parse(text, &m, &err) == BINCONS_OK, "parse status");
  expect(m != NULL, "parse handle");
  expect(err == NULL, "no parse message on success");

  bincons_report* lp = NULL;
  expect(bincons_check(m, "lp", NULL, &lp) == BINCONS_OK, "lp status");
  expect(lp != NULL, "lp report");
  expect(bincons_report_verdict(lp) == 1, "lp verdict");

  char* rendered = bincons_report_render(lp, "text");
  expect(rendered != NULL, "render");
  expect(strstr(rendered, "verdict: true") != NULL, "render content");
  bincons_str_free(rendered);
  bincons_report_free(lp);

  bincons_report* chk = NULL;
  expect(bincons_check(m, "consistent", NULL, &chk) == BINCONS_FALSE,
         "consistency status");
  expect(chk != NULL, "consistency report");
  expect(bincons_report_verdict(chk) == 0, "consistency verdict");
  rendered = bincons_report_render(chk, "json");
  expect(rendered != NULL, "json render");
  expect(strstr(rendered, "\"witness\"") != NULL, "witness present");
  bincons_str_free(rendered);
  bincons_report_free(chk);

  bincons_model_free(m);

  bincons_model* bad = NULL;
  expect(bincons_model_parse("vars\n", &bad, &err) == BINCONS_ERR_PARSE,
         "bad parse status");
  expect(bad == NULL, "bad parse handle");
  expect(err != NULL && strlen(err) > 0, "parse message");
  bincons_str_free(err);

  if (failures) {
    fprintf(stderr, "%d smoke failures\n", failures);
    return 1;
  }
  printf("c smoke ok\n");
  return 0;
}
