#include <stdio.h>
#include <string.h>
#include "dlacheck.h"

int main(void) {
    const char *text =
        "algebroid B { rank 3; bracket [1,2] = e3; bracket [1,3] = e1; }\n"
        "algebroid A { rank 2; bracket [1,2] = e2; }\n";
    DlacheckModel *m = NULL;
    if (dlacheck_model_parse(text, &m) != DLACHECK_OK) return 10;
    DlacheckReport *r = NULL;
    if (dlacheck_check(m, "algebroid", "A", 0, 0, &r) != DLACHECK_OK) return 11;
    if (dlacheck_report_passed(r) != 1) return 12;
    dlacheck_report_free(r);
    if (dlacheck_check(m, "algebroid", "B", 0, 0, &r) != DLACHECK_OK) return 13;
    if (dlacheck_report_passed(r) != 0) return 14;
    printf("%s\n", dlacheck_report_json(r));
    dlacheck_report_free(r);
    if (dlacheck_check(m, "algebroid", "Z", 0, 0, &r) != DLACHECK_ERR_MODEL) return 15;
    if (strlen(dlacheck_last_error()) == 0) return 16;
    dlacheck_model_free(m);
    return 0;
}
