/* C API for the colorful k-center solver.
 *
 * All results are returned as heap-allocated JSON (or SVG/CSV) strings that
 * the caller releases with ckc_string_free. Instances travel behind opaque
 * handles. Functions return ckc_status; on any failure ckc_last_error()
 * carries a message for the calling thread.
 */
#ifndef CKC_H
#define CKC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ckc_status {
  CKC_OK = 0,
  CKC_INFEASIBLE = 1, /* result produced, but no feasible solution / target */
  CKC_ERR_PARSE = 2,  /* malformed input */
  CKC_ERR_GUARD = 3,  /* enumeration size guard tripped */
  CKC_ERR_INTERNAL = 4
} ckc_status;

typedef struct ckc_instance ckc_instance;

const char* ckc_version(void);

/* Message for the last failing call on this thread; empty string otherwise. */
const char* ckc_last_error(void);

void ckc_string_free(char* s);
void ckc_instance_free(ckc_instance* inst);

ckc_status ckc_instance_parse(const char* json, ckc_instance** out);
ckc_status ckc_instance_to_json(const ckc_instance* inst, char** out);

ckc_status ckc_gen_example25(const char* scale_dec, ckc_instance** out);
ckc_status ckc_gen_separated(int n, int k, int c, const char* alpha_dec, const char* rho_dec,
                             uint64_t seed, int outliers, ckc_instance** out);
ckc_status ckc_gen_random(int n, int k, int c, int matrix_metric, uint64_t seed, ckc_instance** out);

/* CoverageReport JSON; CKC_INFEASIBLE when the solution fails its instance. */
ckc_status ckc_verify(const ckc_instance* inst, const char* solution_json, char** report_json);

/* options_json (all optional): {"alpha": "8.25", "seed": 0, "early_stop": false,
 *  "radius": "...", "radius_sq": "p/q", "k_override": 3, "timing": false}
 * RunReport JSON; CKC_INFEASIBLE when no feasible solution exists. */
ckc_status ckc_solve(const ckc_instance* inst, const char* options_json, char** report_json);

ckc_status ckc_oracle(const ckc_instance* inst, char** result_json);

/* graph JSON: {"n": int, "edges": [[u, v, [w...]], ...], "colors": int?}  */
ckc_status ckc_match_support(const char* graph_json, const char* bounds_json, uint64_t seed,
                             char** support_json);
ckc_status ckc_match_recover(const char* graph_json, const char* target_json, uint64_t seed,
                             char** result_json);

/* options_json (all optional): {"alpha": "8.25", "rho": "1.5", "seed": 0,
 *  "solution": {...}} */
ckc_status ckc_plot(const ckc_instance* inst, const char* options_json, char** svg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CKC_H */
