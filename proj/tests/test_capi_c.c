#include <math.h>
#include <stdio.h>

#include "magnon.h"

int main(void) {
    mg_state* s = NULL;
    double c[8];
    int count = 0;
    if (mg_state_one_magnon(6, 2, &s) != MG_OK) return 1;
    if (mg_state_profile(s, c, 8, &count) != MG_OK || count != 3) return 1;
    mg_state_free(s);
    if (fabs(c[0] - 1.0 / 3.0) > 1e-12) return 1;
    if (mg_state_singular(7, &s) != MG_ERR_PARAMETER || s != NULL) return 1;
    printf("%s\n", mg_last_error());
    return 0;
}
