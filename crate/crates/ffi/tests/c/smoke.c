#include <stdio.h>
#include <string.h>

#include "magma.h"

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,         \
              magma_last_error());                                   \
      return 1;                                                      \
    }                                                                \
  } while (0)

int main(void) {
  MagmaSession *s = NULL;
  CHECK(magma_session_new("tag", &s) == MAGMA_STATUS_OK);

  MagmaMagma *x = NULL, *y = NULL, *p = NULL, *a = NULL, *b = NULL;
  CHECK(magma_parse(s, "(ai (at tag 2 1))", &x) == MAGMA_STATUS_OK);
  CHECK(magma_parse(s, "(ai (at tag 3 1))", &y) == MAGMA_STATUS_OK);
  CHECK(magma_pair(s, x, y, &p) == MAGMA_STATUS_OK);
  CHECK(magma_unpair(s, p, &a, &b) == MAGMA_STATUS_OK);

  bool same = false;
  CHECK(magma_equal(a, x, &same) == MAGMA_STATUS_OK && same);

  char *text = NULL;
  CHECK(magma_to_string(b, &text) == MAGMA_STATUS_OK);
  CHECK(strcmp(text, "(ai (at tag 3 1))") == 0);
  magma_string_free(text);

  CHECK(magma_eval(s, "(pr", &text) == MAGMA_STATUS_PARSE_ERROR);
  CHECK(strlen(magma_last_error()) > 0);

  magma_free(x);
  magma_free(y);
  magma_free(p);
  magma_free(a);
  magma_free(b);
  magma_session_free(s);
  puts("ok");
  return 0;
}
