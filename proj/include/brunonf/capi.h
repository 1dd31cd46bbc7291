#ifndef BRUNONF_CAPI_H
#define BRUNONF_CAPI_H

/* C interface of the normal-form library. All structured results come back as
 * JSON documents (schema "brunonf-report/1"); handles are opaque and must be
 * released with the matching free function. Thread-safe for disjoint handles.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bnf_problem bnf_problem;
typedef struct bnf_report bnf_report;

typedef enum {
  BNF_OK = 0,
  BNF_ERR_PARSE = 1,   /* syntax, unknown variable, non-logarithmic input */
  BNF_ERR_MATH = 2,    /* degenerate data, budget, numerical failure */
  BNF_ERR_INVALID = 3  /* bad command, option, or argument */
} bnf_status;

const char* bnf_version(void);

/* Parses a problem file (vars:/scalars:/truncation: headers + expression).
 * On failure writes a JSON error object {"code":..., "message":...} into
 * err_buf (if non-NULL, NUL-terminated, truncated to err_len). */
bnf_status bnf_problem_parse(const char* text, bnf_problem** out,
                             char* err_buf, size_t err_len);
void bnf_problem_free(bnf_problem* p);

/* command: "normalize" | "bruno-ideal" | "certify" | "oracle-compare" | "check".
 * options_json (may be NULL or "{}"): {"order": int, "method": "newton"|"graded",
 * "jet": int, "C": double, "k0": int, "epsilon": double}. */
bnf_status bnf_run(const bnf_problem* p, const char* command,
                   const char* options_json, bnf_report** out,
                   char* err_buf, size_t err_len);

/* omega_k table for a comma-separated eigenvalue list; mode "paper"|"nonneg". */
bnf_status bnf_omega(const char* lambda, int kmax, const char* mode, long cap,
                     bnf_report** out, char* err_buf, size_t err_len);

/* Serialized report; the pointer is owned by the report handle. */
const char* bnf_report_json(const bnf_report* r);
void bnf_report_free(bnf_report* r);

#ifdef __cplusplus
}
#endif

#endif
