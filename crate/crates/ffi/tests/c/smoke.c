#include <stdio.h>
#include <string.h>

#include "impsep.h"

static const char *THETA =
    "p sep 5 5\ne 1 2\ne 2 5\ne 1 3\ne 3 4\ne 4 5\nx 1\ny 5\n";

int main(void) {
    ImpsepInstance *inst = NULL;
    if (impsep_instance_parse(THETA, &inst) != IMPSEP_STATUS_OK) {
        return 1;
    }
    ImpsepSets *sets = NULL;
    if (impsep_enumerate_important(inst, 1, &sets) != IMPSEP_STATUS_OK) {
        return 2;
    }
    for (size_t i = 0; i < impsep_sets_count(sets); i++) {
        const uint32_t *ids = NULL;
        size_t len = 0;
        impsep_sets_get(sets, i, &ids, &len);
        for (size_t j = 0; j < len; j++) {
            printf(j ? " %u" : "%u", ids[j]);
        }
        printf("\n");
    }
    impsep_sets_free(sets);
    impsep_instance_free(inst);

    inst = NULL;
    ImpsepStatus s = impsep_instance_parse("p sep 2 1\ne 1 1\n", &inst);
    printf("%s: %s\n", impsep_status_name(s), impsep_last_error());
    impsep_instance_free(inst);
    return 0;
}
