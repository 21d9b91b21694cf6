#include <stdio.h>
#include <string.h>

#include "schurweyl.h"

static int check(SwStatus got, SwStatus want, const char *what) {
    if (got != want) {
        const char *msg = sw_last_error();
        fprintf(stderr, "%s: status %d (%s)\n", what, (int)got, msg ? msg : "");
        return 1;
    }
    return 0;
}

int main(void) {
    int failures = 0;
    SwWeight *lambda = NULL;
    failures += check(sw_weight_from_json("{\"0\":2,\"1\":-1}", &lambda), SW_STATUS_OK, "parse");

    bool inside = false;
    failures += check(sw_hull_contains(lambda, "{\"0\":\"1/2\",\"1\":\"1/2\"}", true, &inside),
                      SW_STATUS_OK, "hull");
    failures += !inside;

    char *json = NULL;
    failures += check(sw_decompose(2, 3, &json), SW_STATUS_OK, "decompose");
    if (json) {
        printf("%s\n", json);
        sw_string_free(json);
    }

    SwWeight *bad = NULL;
    failures += check(sw_weight_from_json("{\"0\":0}", &bad), SW_STATUS_PARSE, "zero entry");
    failures += sw_last_error() == NULL;

    sw_weight_free(lambda);
    return failures;
}
