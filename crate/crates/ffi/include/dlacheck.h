#ifndef DLACHECK_H
#define DLACHECK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define DLACHECK_OK 0

// A required pointer argument was null.
#define DLACHECK_ERR_NULL 1

// A string argument was not valid UTF-8.
#define DLACHECK_ERR_UTF8 2

// The model text did not parse.
#define DLACHECK_ERR_PARSE 3

// The named declaration is missing, has the wrong kind or is malformed.
#define DLACHECK_ERR_MODEL 4

// The check name is not one of the supported checks.
#define DLACHECK_ERR_UNKNOWN_CHECK 5

// An internal error; the library state is still usable.
#define DLACHECK_ERR_PANIC 6

// A parsed model file.
typedef struct DlacheckModel DlacheckModel;

// The outcome of one check.
typedef struct DlacheckReport DlacheckReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or an empty string. The
// pointer stays valid until the next call into the library on this thread.
const char *dlacheck_last_error(void);

// Library version as a static string.
const char *dlacheck_version(void);

// Parses model text into a new handle stored in `*out`.
//
// # Safety
// `text` must be a nul-terminated string and `out` a valid pointer.
int32_t dlacheck_model_parse(const char *text, struct DlacheckModel **out);

// Appends the declarations of `text` to `model`. Names must stay unique.
//
// # Safety
// `model` must come from `dlacheck_model_parse`; `text` must be nul-terminated.
int32_t dlacheck_model_extend(struct DlacheckModel *model, const char *text);

// Number of declarations in the model, or -1 for a null handle.
//
// # Safety
// `model` must be null or come from `dlacheck_model_parse`.
int64_t dlacheck_model_len(const struct DlacheckModel *model);

// # Safety
// `model` must be null or come from `dlacheck_model_parse`, and is invalid
// afterwards.
void dlacheck_model_free(struct DlacheckModel *model);

// Runs the check `check` on the declaration `name`. `check` is one of
// `algebroid`, `rep`, `matched-pair`, `bialgebroid`, `poisson`, `manin`,
// `vacant`, `dvb-pair`, `dvb-zmaps`, `dvb-vue`. A zero `samples` uses the
// default. A failing check is still `DLACHECK_OK`; see
// `dlacheck_report_passed`.
//
// # Safety
// `model` must come from `dlacheck_model_parse`, the strings must be
// nul-terminated and `out` a valid pointer.
int32_t dlacheck_check(const struct DlacheckModel *model,
                       const char *check,
                       const char *name,
                       uint64_t seed,
                       uint32_t samples,
                       struct DlacheckReport **out);

// 1 if the check passed, 0 if it failed, -1 for a null handle.
//
// # Safety
// `report` must be null or come from `dlacheck_check`.
int32_t dlacheck_report_passed(const struct DlacheckReport *report);

// Number of witnesses, or -1 for a null handle.
//
// # Safety
// `report` must be null or come from `dlacheck_check`.
int64_t dlacheck_report_witness_count(const struct DlacheckReport *report);

// The report as one line of JSON, owned by the report.
//
// # Safety
// `report` must be null or come from `dlacheck_check`.
const char *dlacheck_report_json(const struct DlacheckReport *report);

// The report in the CLI text format, owned by the report.
//
// # Safety
// `report` must be null or come from `dlacheck_check`.
const char *dlacheck_report_text(const struct DlacheckReport *report);

// # Safety
// `report` must be null or come from `dlacheck_check`, and is invalid
// afterwards.
void dlacheck_report_free(struct DlacheckReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DLACHECK_H */
