#include <stdio.h>
#include <string.h>
#include "hlvertex.h"

int main(void) {
    HlvPoly *p = NULL;
    if (hlv_kostka("2,1,1,0", "1,1,1,1", "2,2", HLV_METHOD_BOTH, &p) != HLV_STATUS_OK) {
        fprintf(stderr, "kostka: %s\n", hlv_last_error_message());
        return 1;
    }
    char *s = NULL;
    hlv_poly_to_string(p, &s);
    printf("%s\n", s);
    hlv_string_free(s);
    hlv_poly_free(p);

    HlvOpSum *sum = NULL;
    if (hlv_rewrite("H[2,2", &sum) != HLV_STATUS_PARSE || hlv_last_error_message() == NULL) {
        return 2;
    }
    int sign = 0;
    char *w = NULL;
    if (hlv_straighten("0,2", &sign, &w) != HLV_STATUS_OK || sign != -1 || strcmp(w, "1,1") != 0) {
        return 3;
    }
    hlv_string_free(w);
    return 0;
}
