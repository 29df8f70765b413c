/* C interface to the fixed-locus invariant engine.
 *
 * Every command produces an hsf_result handle carrying the rendered output
 * (text, CSV or JSON, always exact integers and p/q rationals). The returned
 * status distinguishes success, a failed identity verification, and the
 * various input errors; on error the result output holds the diagnostic.
 * Results must be released with hsf_result_free.
 */
#ifndef HSF_H
#define HSF_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hsf_status {
  HSF_OK = 0,
  HSF_VERIFY_FAILED = 1,
  HSF_ERR_ARGUMENT = 2,
  HSF_ERR_PARITY = 3,
  HSF_ERR_RANGE = 4,
  HSF_ERR_UNKNOWN_FAMILY = 5,
  HSF_ERR_INTERNAL = 6
} hsf_status;

typedef enum hsf_format {
  HSF_FORMAT_TEXT = 0,
  HSF_FORMAT_CSV = 1,
  HSF_FORMAT_JSON = 2
} hsf_format;

typedef struct hsf_result hsf_result;

/* Identity verification over the given root counts at one truncation
 * degree. HSF_OK when every check passes, HSF_VERIFY_FAILED when any check
 * reports a discrepancy (the report is still rendered into the result). */
hsf_status hsf_run_verify(const int* roots, int num_roots, int degree,
                          hsf_format format, hsf_result** out);

/* The 11-row (K^2, chi) table with realizing trace values. */
hsf_status hsf_run_table(hsf_format format, hsf_result** out);

/* Fixed-surface invariants for one trace value t. Even t yields
 * HSF_ERR_PARITY, out-of-range t yields HSF_ERR_RANGE. */
hsf_status hsf_run_invariants(int t, hsf_format format, hsf_result** out);

/* Catalog of example families; family may be NULL for the full listing
 * (which then includes the trace coverage summary). */
hsf_status hsf_run_catalog(const char* family, hsf_format format,
                           hsf_result** out);

/* Rendered output of a result; valid until hsf_result_free. Never NULL. */
const char* hsf_result_output(const hsf_result* result);

void hsf_result_free(hsf_result* result);

/* Short description of a status code. */
const char* hsf_status_message(hsf_status status);

#ifdef __cplusplus
}
#endif

#endif /* HSF_H */
