/*
 * C interface of the hsb library: Jordan-triple calculus on C^{r x s} and the
 * base-point classification of invariant holomorphic hermitian principal bundles.
 *
 * Objects are opaque handles released with the matching *_free function. Every
 * function returning hsb_status leaves a message for hsb_last_error() on failure;
 * the message is thread-local and valid until the next failing call on that thread.
 *
 * Elements of Z = C^{r x s} cross the interface as row-major interleaved arrays of
 * 2 * r * s doubles (re, im, re, im, ...).
 */
#ifndef HSB_H
#define HSB_H

#include <stddef.h>
#include <stdint.h>

#if defined(HSB_BUILDING_LIBRARY)
#define HSB_API __attribute__((visibility("default")))
#else
#define HSB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hsb_status {
  HSB_OK = 0,
  HSB_ERR_INVALID_ARGUMENT = 1,
  HSB_ERR_PARSE = 2,
  HSB_ERR_SHAPE_MISMATCH = 3,
  HSB_ERR_DIMENSION_MISMATCH = 4,
  HSB_ERR_NOT_HERMITIAN = 5,
  HSB_ERR_NEGATIVE_SPECTRUM = 6,
  HSB_ERR_NON_FINITE = 7,
  HSB_ERR_SINGULAR_BERGMAN = 8,
  HSB_ERR_CUT_LOCUS = 9,
  HSB_ERR_CLOSURE_VIOLATION = 10,
  HSB_ERR_NOT_IN_K = 11,
  HSB_ERR_NOT_HERMITIAN_STRUCTURE = 12,
  HSB_ERR_COVARIANCE_VIOLATION = 13,
  HSB_ERR_SINGULAR_GAUGE = 14,
  HSB_ERR_NOT_UNITARY = 15,
  HSB_ERR_INTERNAL = 99
} hsb_status;

typedef struct hsb_datum hsb_datum;
typedef struct hsb_report hsb_report;

HSB_API const char* hsb_version(void);
HSB_API const char* hsb_status_string(hsb_status status);
HSB_API const char* hsb_last_error(void);

/* Classification data files (see docs/formats.md). */
HSB_API hsb_status hsb_datum_load(const char* path, hsb_datum** out);
HSB_API hsb_status hsb_datum_parse(const char* json_text, hsb_datum** out);
HSB_API void hsb_datum_free(hsb_datum* datum);
HSB_API hsb_status hsb_datum_dims(const hsb_datum* datum, int* r, int* s, int* n, int* hermitian);
/* Traces of words of length <= max_word_len. Writes min(capacity, total) values and
 * sets *count to the total; pass capacity 0 to query the size. */
HSB_API hsb_status hsb_datum_fingerprint(const hsb_datum* datum, int max_word_len, double* re, double* im,
                                         size_t capacity, size_t* count);

/* Commands. Each produces a report; the report's pass flag carries the verdict. */
HSB_API hsb_status hsb_verify(int r, int s, int trials, uint64_t seed, double tol, hsb_report** out);
HSB_API hsb_status hsb_classify(const hsb_datum* datum, int epsilon, double tol, hsb_report** out);
HSB_API hsb_status hsb_dualize(const hsb_datum* datum, double tol, hsb_report** out);
HSB_API hsb_status hsb_curvature(const hsb_datum* datum, int epsilon, double tol, hsb_report** out);

HSB_API void hsb_report_free(hsb_report* report);
HSB_API int hsb_report_passed(const hsb_report* report);
HSB_API size_t hsb_report_check_count(const hsb_report* report);
/* Checks are ordered by name. `name` stays valid for the lifetime of the report. */
HSB_API hsb_status hsb_report_check(const hsb_report* report, size_t index, const char** name, double* residual,
                                    double* tolerance, int* pass);
/* Canonical JSON owned by the report. */
HSB_API const char* hsb_report_json(const hsb_report* report);
HSB_API hsb_status hsb_report_write(const hsb_report* report, const char* path);

/* Pointwise operations on Z. */
HSB_API hsb_status hsb_triple_product(int r, int s, const double* u, const double* v, const double* w, double* out);
HSB_API hsb_status hsb_quasi_inverse(int r, int s, const double* z, const double* w, double* out);
HSB_API hsb_status hsb_transvection(int r, int s, int epsilon, const double* w, const double* z, double* out);
HSB_API hsb_status hsb_tan_epsilon(int r, int s, int epsilon, const double* v, double* out);

#ifdef __cplusplus
}
#endif

#endif /* HSB_H */
