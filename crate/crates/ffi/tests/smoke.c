#include <stdio.h>
#include <string.h>
#include "qtinv.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    uint32_t alpha[] = {2};
    QtinvSeries *c = NULL, *h = NULL;
    CHECK(qtinv_closed_form(3, 2, alpha, 1, &c) == QTINV_STATUS_OK);
    CHECK(qtinv_hilb_fixed(3, 2, alpha, 1, 0, &h) == QTINV_STATUS_OK);
    CHECK(qtinv_series_degree(h) == 16);
    for (uint64_t k = 0; k <= 16; k++) {
        int64_t a, b;
        CHECK(qtinv_series_coeff(c, k, &a) == QTINV_STATUS_OK);
        CHECK(qtinv_series_coeff(h, k, &b) == QTINV_STATUS_OK);
        CHECK(a == b);
    }
    char *text = NULL;
    CHECK(qtinv_series_to_string(h, &text) == QTINV_STATUS_OK);
    CHECK(strcmp(text, "1 + t^6 + t^8 + t^10 + t^12 + t^16") == 0);
    qtinv_string_free(text);
    qtinv_series_free(c);
    qtinv_series_free(h);

    QtinvField *f = NULL;
    CHECK(qtinv_field_new(6, &f) == QTINV_STATUS_INVALID_ARGUMENT);
    CHECK(qtinv_last_error() != NULL);
    CHECK(qtinv_field_new(4, &f) == QTINV_STATUS_OK);
    uint32_t x;
    CHECK(qtinv_field_op(f, QTINV_FIELD_OP_ADD, 3, 3, &x) == QTINV_STATUS_OK && x == 0);
    CHECK(qtinv_field_op(f, QTINV_FIELD_OP_DIV, 1, 0, &x) == QTINV_STATUS_ARITHMETIC);
    qtinv_field_free(f);

    uint64_t orbits;
    CHECK(qtinv_orbit_count(3, 2, alpha, 1, 0, &orbits) == QTINV_STATUS_OK && orbits == 6);
    printf("ok %s\n", qtinv_version());
    return 0;
}
