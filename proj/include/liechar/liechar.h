/* liechar C API: exact Dirac-index and character-lifting computations for
 * semisimple root systems, exposed through opaque handles and JSON strings.
 *
 * Every function returning lc_status sets a thread-local message readable
 * via lc_last_error() on failure. Strings returned through char** are
 * heap-allocated; release them with lc_string_free().
 */
#ifndef LIECHAR_H
#define LIECHAR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_status {
    LC_OK = 0,
    LC_ERR_CHECK_FAILED = 1, /* a verification suite reported a failed identity */
    LC_ERR_USAGE = 2,        /* malformed input (type strings, weights, flags) */
    LC_ERR_VALIDATION = 3,   /* semantically invalid input (non-roots, singular params) */
    LC_ERR_RESOURCE = 4,     /* a configured cap was exceeded */
    LC_ERR_INTERNAL = 5      /* invariant violation; always a bug */
} lc_status;

typedef struct lc_context lc_context;
typedef struct lc_root_system lc_root_system;
typedef struct lc_subsystem lc_subsystem;
typedef struct lc_endoscopic_datum lc_endoscopic_datum;

/* Context: resource caps shared by objects created from it. */
lc_context* lc_context_new(void);
void lc_context_free(lc_context* ctx);
/* name: "max_rank" | "max_weyl_order" | "max_terms". */
lc_status lc_context_set_cap(lc_context* ctx, const char* name, long long value);

/* Thread-local message for the most recent failure on this thread. */
const char* lc_last_error(void);
void lc_string_free(char* s);

/* Root systems. cartan_type e.g. "A1", "G2", "A2xA1". */
lc_status lc_root_system_new(const lc_context* ctx, const char* cartan_type,
                             lc_root_system** out);
void lc_root_system_free(lc_root_system* rs);
lc_status lc_root_system_describe(const lc_root_system* rs, char** json_out);

/* Subsystems. simple_roots: semicolon-separated simple-root coordinate
 * vectors, e.g. "1,0;1,2"; "" is the Cartan subalgebra. */
lc_status lc_subsystem_new(const lc_root_system* rs, const char* simple_roots,
                           lc_subsystem** out);
void lc_subsystem_free(lc_subsystem* sub);

/* Weyl group of the full system (sub == NULL) or of a subsystem. */
lc_status lc_weyl_elements(const lc_root_system* rs, const lc_subsystem* sub, char** json_out);

/* Irreducible character; weight: comma-separated rationals in the
 * fundamental-weight basis, e.g. "1,1" or "1/2,3". */
lc_status lc_irreducible_character(const lc_root_system* rs, const lc_subsystem* sub,
                                   const char* weight, char** json_out);

lc_status lc_spin_characters(const lc_root_system* rs, const lc_subsystem* sub, char** json_out);
lc_status lc_dirac_index(const lc_root_system* rs, const lc_subsystem* sub, const char* lambda,
                         char** json_out);
lc_status lc_kostant_hd(const lc_root_system* rs, const lc_subsystem* sub, const char* lambda,
                        char** json_out);
lc_status lc_dsquared_spectrum(const lc_root_system* rs, const lc_subsystem* sub,
                               const char* lambda, char** json_out);

/* Endoscopic data and discrete-series lifting. */
lc_status lc_endoscopic_new(const lc_root_system* rs, const char* k_simple, const char* h_simple,
                            int sign_q, lc_endoscopic_datum** out);
void lc_endoscopic_free(lc_endoscopic_datum* datum);
lc_status lc_endoscopic_describe(const lc_endoscopic_datum* datum, char** json_out);
lc_status lc_lift_discrete_series(const lc_endoscopic_datum* datum, const char* parameter,
                                  char** json_out);
lc_status lc_verify_lift_identity(const lc_endoscopic_datum* datum, const char* parameter,
                                  char** json_out);

/* Rank-1 matrix oracle report for 0 <= n <= 50. */
lc_status lc_rank1_oracle(int n, char** json_out);

/* Verification suites over a catalog JSON document.
 * suite: "identities" | "lifting" | "oracle" | "all".
 * use_seed != 0 overrides the catalog seed with the given one.
 * all_passed receives 1/0; the report JSON is always produced when parsing
 * succeeds, even if checks fail. */
lc_status lc_verify_catalog(const lc_context* ctx, const char* catalog_json, const char* suite,
                            unsigned long long seed, int use_seed, char** report_json_out,
                            int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* LIECHAR_H */
