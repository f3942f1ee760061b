#ifndef SPLITAUTH_H
#define SPLITAUTH_H

/*
 * C interface to the splitauth library: cyclic splitting designs, splitting
 * authentication codes and their exact security analysis.
 *
 * Every object is an opaque handle released with its *_free function.
 * Functions returning sa_status leave their out-parameters untouched on
 * failure; sa_last_error() then describes the problem (per thread).
 * Strings returned through char** are heap allocated and released with
 * sa_string_free. Rule, source and splitting indices are 0-based; points
 * and messages are 1-based labels. Rationals cross the boundary as "p/q".
 */

#include <stddef.h>

#if defined(SPLITAUTH_BUILDING)
#define SPLITAUTH_API __attribute__((visibility("default")))
#else
#define SPLITAUTH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sa_status {
  SA_OK = 0,
  SA_ERR_ARGUMENT = 1,   /* null pointer or unknown enumerator */
  SA_ERR_PARSE = 2,      /* malformed JSON or rational */
  SA_ERR_VALIDATION = 3, /* structurally invalid family, design or code */
  SA_ERR_DOMAIN = 4,     /* index or parameter out of range */
  SA_ERR_INTERNAL = 5
} sa_status;

typedef enum sa_format {
  SA_FORMAT_TEXT = 0,
  SA_FORMAT_MARKDOWN = 1,
  SA_FORMAT_CSV = 2,
  SA_FORMAT_JSON = 3
} sa_format;

typedef enum sa_congruence_class {
  SA_CONGRUENT_ONE = 0,
  SA_CONGRUENT_L = 1,
  SA_CONGRUENT_NEITHER = 2
} sa_congruence_class;

/* Tri-state verdicts. */
typedef enum sa_check {
  SA_CHECK_FAIL = 0,
  SA_CHECK_PASS = 1,
  SA_CHECK_NOT_APPLICABLE = 2
} sa_check;

typedef struct sa_params {
  int t;
  int v;
  long long b;
  int c;
  int u;
  long long lambda;
} sa_params;

typedef struct sa_family sa_family;
typedef struct sa_design sa_design;
typedef struct sa_verification sa_verification;
typedef struct sa_code sa_code;
typedef struct sa_report sa_report;
typedef struct sa_audit sa_audit;

SPLITAUTH_API const char* sa_last_error(void);
SPLITAUTH_API const char* sa_status_name(sa_status status);
SPLITAUTH_API void sa_string_free(char* text);

/* Parameter arithmetic */
SPLITAUTH_API sa_status sa_lambda_level(const sa_params* params, int s, char** out);
/* *all_pass is 1 when every necessary condition holds; *failures (optional)
 * receives one failure per line. */
SPLITAUTH_API sa_status sa_admissible(const sa_params* params, int* all_pass, char** failures);
SPLITAUTH_API sa_status sa_congruence(int v, int c, int u, sa_congruence_class* out);

/* Base-block families */
SPLITAUTH_API sa_status sa_family_generate(int c, int n, sa_family** out);
SPLITAUTH_API sa_status sa_family_from_json(const char* json, sa_family** out);
SPLITAUTH_API sa_status sa_family_to_json(const sa_family* family, char** out);
SPLITAUTH_API int sa_family_v(const sa_family* family);
SPLITAUTH_API size_t sa_family_base_block_count(const sa_family* family);
SPLITAUTH_API void sa_family_free(sa_family* family);

/* Designs */
SPLITAUTH_API sa_status sa_family_develop(const sa_family* family, int t, sa_design** out);
/* Accepts family (developed first), design or code documents. */
SPLITAUTH_API sa_status sa_design_from_json(const char* json, sa_design** out);
SPLITAUTH_API sa_status sa_design_to_json(const sa_design* design, char** out);
SPLITAUTH_API int sa_design_v(const sa_design* design);
SPLITAUTH_API size_t sa_design_block_count(const sa_design* design);
/* Orbit lengths are only known for developed designs; count is 0 otherwise. */
SPLITAUTH_API size_t sa_design_orbit_count(const sa_design* design);
SPLITAUTH_API sa_status sa_design_orbit_length(const sa_design* design, size_t index, int* out);
SPLITAUTH_API void sa_design_free(sa_design* design);

SPLITAUTH_API sa_status sa_design_verify(const sa_design* design, int t, sa_verification** out);
SPLITAUTH_API int sa_verification_ok(const sa_verification* result);
SPLITAUTH_API sa_status sa_verification_params(const sa_verification* result, sa_params* out);
SPLITAUTH_API sa_status sa_verification_summary(const sa_verification* result, char** out);
SPLITAUTH_API sa_status sa_verification_to_json(const sa_verification* result, char** out);
SPLITAUTH_API void sa_verification_free(sa_verification* result);

/* Codes */
SPLITAUTH_API sa_status sa_code_from_design(const sa_design* design, int t, sa_code** out);
/* Code documents are read as-is; family and design documents are verified
 * and converted with t = 2. */
SPLITAUTH_API sa_status sa_code_from_json(const char* json, sa_code** out);
SPLITAUTH_API sa_status sa_code_to_json(const sa_code* code, char** out);
SPLITAUTH_API sa_status sa_code_render(const sa_code* code, sa_format format, char** out);
SPLITAUTH_API size_t sa_code_rule_count(const sa_code* code);
SPLITAUTH_API int sa_code_source_count(const sa_code* code);
SPLITAUTH_API int sa_code_message_count(const sa_code* code);
SPLITAUTH_API sa_status sa_code_encode(const sa_code* code, size_t rule, int source, int r,
                                       int* message);
/* *source is -1 when the message is rejected. */
SPLITAUTH_API sa_status sa_code_decode(const sa_code* code, size_t rule, int message,
                                       int* source);
SPLITAUTH_API void sa_code_free(sa_code* code);

/* Security analysis */
SPLITAUTH_API sa_status sa_code_analyze(const sa_code* code, int i_max, sa_report** out);
SPLITAUTH_API sa_status sa_report_pd(const sa_report* report, int i, char** out);
SPLITAUTH_API sa_status sa_report_bound(const sa_report* report, int i, char** out);
SPLITAUTH_API int sa_report_security_level(const sa_report* report);
SPLITAUTH_API sa_check sa_report_optimal(const sa_report* report);
SPLITAUTH_API int sa_report_perfect_secrecy(const sa_report* report);
SPLITAUTH_API sa_status sa_report_to_text(const sa_report* report, char** out);
SPLITAUTH_API sa_status sa_report_to_json(const sa_report* report, char** out);
SPLITAUTH_API void sa_report_free(sa_report* report);

/* Claim audit of a code, design or family document: structure, lambda = 1,
 * bound equality up to i_max, optimality, perfect secrecy. A failed claim is
 * SA_OK with sa_audit_passed() == 0; malformed documents are errors. */
SPLITAUTH_API sa_status sa_audit_json(const char* json, int i_max, sa_audit** out);
SPLITAUTH_API int sa_audit_passed(const sa_audit* audit);
/* Comma-separated names of violated properties (empty when passed). */
SPLITAUTH_API sa_status sa_audit_violations(const sa_audit* audit, char** out);
SPLITAUTH_API sa_status sa_audit_to_text(const sa_audit* audit, char** out);
SPLITAUTH_API sa_status sa_audit_to_json(const sa_audit* audit, char** out);
SPLITAUTH_API void sa_audit_free(sa_audit* audit);

#ifdef __cplusplus
}
#endif

#endif /* SPLITAUTH_H */
