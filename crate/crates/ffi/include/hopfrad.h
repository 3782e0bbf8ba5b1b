#ifndef HOPFRAD_H
#define HOPFRAD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes; the nonzero values match the command-line exit codes.
typedef enum {
  HOPFRAD_STATUS_OK = 0,
  HOPFRAD_STATUS_OTHER = 1,
  HOPFRAD_STATUS_VALIDATION_FAILED = 2,
  HOPFRAD_STATUS_PARSE_ERROR = 3,
  HOPFRAD_STATUS_CAP_EXCEEDED = 4,
  HOPFRAD_STATUS_CONTRADICTION = 5,
  HOPFRAD_STATUS_NULL_ARGUMENT = 6,
  HOPFRAD_STATUS_INVALID_UTF8 = 7,
  HOPFRAD_STATUS_PANIC = 8,
} HopfradStatus;

// A parsed definition together with its H-module algebra.
typedef struct HopfradModule HopfradModule;

// Seed and enumeration cap. A null pointer selects the defaults.
typedef struct {
  uint64_t seed;
  uint64_t cap;
} HopfradOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The default seed used when no options are given.
uint64_t hopfrad_default_seed(void);

// Message of the last failure on this thread, or null. Valid until the next call.
const char *hopfrad_last_error(void);

// Parses a definition from a JSON string.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
HopfradStatus hopfrad_module_from_json(const char *json, HopfradModule **out);

// Reads and parses a definition file.
//
// # Safety
// `path` must be a NUL-terminated string and `out` a valid pointer.
HopfradStatus hopfrad_module_from_file(const char *path, HopfradModule **out);

// Releases a module. Null is ignored.
//
// # Safety
// `m` must come from one of the constructors and not be used afterwards.
void hopfrad_module_free(HopfradModule *m);

// Dimensions of `R` and `H`.
//
// # Safety
// `m` must be a live module; the output pointers may be null.
HopfradStatus hopfrad_module_dims(const HopfradModule *m, uintptr_t *dim_r, uintptr_t *dim_h);

// Checks the algebra, Hopf and action axioms at the file's level (or at
// `level` when it is not null: "weak", "module" or "unital"). Writes the reports
// as JSON; returns `ValidationFailed` when any axiom fails.
//
// # Safety
// `m` must be a live module, `level` null or a NUL-terminated string, `out` valid.
HopfradStatus hopfrad_module_validate(const HopfradModule *m, const char *level, char **out);

// Computes one radical (`baer`, `jacobson`, `brownmccoy`, `locnil`, `gt`,
// `fisher:<base>`) or `all`, as JSON.
//
// # Safety
// `m` must be a live module, `which` a NUL-terminated string, `opts` null or valid, `out` valid.
HopfradStatus hopfrad_module_radical(const HopfradModule *m,
                                     const char *which,
                                     const HopfradOptions *opts,
                                     char **out);

// The full comparison report (entries, checks, observations) as JSON.
//
// # Safety
// `m` must be a live module, `opts` null or valid, `out` valid.
HopfradStatus hopfrad_module_report(const HopfradModule *m, const HopfradOptions *opts, char **out);

// Brute-force recomputation over a prime field, as JSON. Returns
// `Contradiction` when the brute and structural routes differ.
//
// # Safety
// `m` must be a live module, `opts` null or valid, `out` valid.
HopfradStatus hopfrad_module_oracle(const HopfradModule *m, const HopfradOptions *opts, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void hopfrad_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFRAD_H */
