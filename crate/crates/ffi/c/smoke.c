/* Links against libhdepth_ffi and reproduces the two worked examples. */
#include <stdio.h>
#include <string.h>

#include "hdepth.h"

static int check(HdStatus status) {
    if (status != HD_STATUS_OK) {
        fprintf(stderr, "status %d: %s\n", (int)status, hd_last_error());
        return 1;
    }
    return 0;
}

int main(void) {
    /* R/((x1) ∩ (x2..x6)), generators x1*x2, ..., x1*x6 */
    uint32_t gens[5 * 6] = {0};
    for (int i = 0; i < 5; i++) {
        gens[i * 6] = 1;
        gens[i * 6 + i + 1] = 1;
    }
    HdSeries *series = NULL;
    if (check(hd_series_monomial_module(6, gens, 5, HD_MODULE_KIND_QUOTIENT, 0, &series))) return 1;
    HdResult *result = NULL;
    if (check(hd_hdepth(series, &result))) return 1;
    char *text = hd_result_to_text(result);
    printf("dim M = %u\n%s", hd_series_denom_exp(series), text);
    int ok = hd_result_value(result) == 3 && hd_series_denom_exp(series) == 5;
    hd_string_free(text);
    hd_result_free(result);
    hd_series_free(series);

    if (check(hd_series_from_text("2-3*t-2*t^2+2*t^3+4*t^4", 9, &series))) return 1;
    if (check(hd_hdepth(series, &result))) return 1;
    char *json = hd_result_to_json(result);
    printf("%s\n", json);
    ok = ok && hd_result_value(result) == 5 && hd_result_trace_len(result) == 4;
    hd_string_free(json);
    hd_result_free(result);
    hd_series_free(series);

    if (hd_series_from_text("2x", 3, &series) != HD_STATUS_PARSE_ERROR) ok = 0;
    printf("%s\n", ok ? "smoke: ok" : "smoke: FAILED");
    return ok ? 0 : 1;
}
