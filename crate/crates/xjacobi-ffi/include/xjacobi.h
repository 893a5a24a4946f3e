#ifndef XJACOBI_H
#define XJACOBI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of an interface call. Codes 1 to 5 match the command-line exit codes.
typedef enum XjStatus {
  XJ_STATUS_OK = 0,
  XJ_STATUS_VERIFY_FAILED = 1,
  XJ_STATUS_PARSE_ERROR = 2,
  XJ_STATUS_INVALID_PARAMS = 3,
  XJ_STATUS_ILLEGAL_STEP = 4,
  XJ_STATUS_ILLEGAL_DIAGRAM = 5,
  XJ_STATUS_NULL_ARGUMENT = 6,
  XJ_STATUS_INVALID_UTF8 = 7,
  XJ_STATUS_INDEX_NOT_IN_FAMILY = 8,
  XJ_STATUS_INTERNAL = 9,
} XjStatus;

// A constructed exceptional family.
typedef struct XjFamily XjFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread; empty if none. The
// pointer stays valid until the next failing call on the same thread.
const char *xj_last_error(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string obtained from this library and not yet freed.
void xj_string_free(char *s);

// Build a family from specification text (`key = value` lines).
//
// # Safety
// `spec` must be a valid nul-terminated string and `out` valid for writing.
enum XjStatus xj_family_new(const char *spec, struct XjFamily **out);

// Release a family. Null is ignored.
//
// # Safety
// `fam` must be null or a handle from [`xj_family_new`] not yet freed.
void xj_family_free(struct XjFamily *fam);

// Degree of `tau`, or -1 for a null handle.
//
// # Safety
// `fam` must be null or a live handle.
int64_t xj_family_tau_degree(const struct XjFamily *fam);

// Whether index `i` belongs to the family's spectrum; false for null.
//
// # Safety
// `fam` must be null or a live handle.
bool xj_family_contains(const struct XjFamily *fam, int64_t i);

// The construction document (operator, index sets, eigenfunctions and
// norms for the first `window` indices) as JSON.
//
// # Safety
// `fam` must be a live handle and `out` valid for writing.
enum XjStatus xj_family_json(const struct XjFamily *fam, uintptr_t window, char **out);

// The eigenfunction `pi_i` as JSON `{"i": i, "num": [...], "den": [...]}`
// with ascending coefficients written as `"p/q"` strings.
//
// # Safety
// `fam` must be a live handle and `out` valid for writing.
enum XjStatus xj_family_pi(const struct XjFamily *fam, int64_t i, char **out);

// Run comma-separated checks (empty for the default set) over the first
// `window` indices. Writes a JSON report to `out` when it is not null and
// returns [`XjStatus::VerifyFailed`] if any check fails.
//
// # Safety
// `fam` must be a live handle, `checks` a valid string, and `out` null or
// valid for writing.
enum XjStatus xj_family_verify(const struct XjFamily *fam,
                               const char *checks,
                               uintptr_t window,
                               char **out);

// Render the spectral diagram of a specification.
//
// # Safety
// `spec` must be a valid string and `out` valid for writing.
enum XjStatus xj_render(const char *spec, uintptr_t window, char **out);

// Decode a rendered diagram into a canonical specification.
//
// # Safety
// `diagram` must be a valid string and `out` valid for writing.
enum XjStatus xj_decode(const char *diagram, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* XJACOBI_H */
