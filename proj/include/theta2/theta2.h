/* theta2 — characteristic-2 theta series toolkit, C API.
 *
 * Exact GF(2) Laurent-series arithmetic, theta-series reciprocals and their
 * coefficient-support sets, congruence class tables, Groebner-certified
 * quotient membership, the identity-verification catalog, and density
 * experiments, behind opaque handles with integer status codes.
 *
 * Conventions:
 *  - every function returns THETA2_OK (0) on success, a nonzero status
 *    otherwise; theta2_last_error() describes the most recent failure in
 *    the calling thread;
 *  - strings returned through char** are heap-allocated; release them with
 *    theta2_string_free;
 *  - handles are released with their matching *_free function;
 *  - a NULL theta2_ctx means default limits everywhere one is accepted.
 */
#ifndef THETA2_H
#define THETA2_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct theta2_series theta2_series;
typedef struct theta2_ctx theta2_ctx;

enum {
  THETA2_OK = 0,
  THETA2_ERR_USAGE = 2,
  THETA2_ERR_BUDGET = 3,
  THETA2_ERR_DOMAIN = 4,     /* division by the zero series and kin */
  THETA2_ERR_PRECISION = 5,  /* outside the certified window */
  THETA2_ERR_INTERNAL = 9
};

/* Thread-local message for the last failing call in this thread. */
const char* theta2_last_error(void);
void theta2_string_free(char* s);

/* --- configuration ------------------------------------------------- */
theta2_ctx* theta2_ctx_new(void);
void theta2_ctx_free(theta2_ctx* ctx);
int theta2_ctx_set_precision_ceiling(theta2_ctx* ctx, int64_t max_bits);
int theta2_ctx_set_memory_ceiling(theta2_ctx* ctx, int64_t bytes);
int theta2_ctx_set_pair_budget(theta2_ctx* ctx, int64_t pairs);
int theta2_ctx_set_parallelism(theta2_ctx* ctx, int workers);

/* --- series -------------------------------------------------------- */
/* Sum of x^(n^2) over integers n congruent to i mod l, exponents < max_exp. */
int theta2_series_theta(int64_t l, int64_t i, int64_t max_exp,
                        theta2_series** out);
int theta2_series_inverse(const theta2_series* s, theta2_series** out);
int theta2_series_add(const theta2_series* a, const theta2_series* b,
                      theta2_series** out);
int theta2_series_mul(const theta2_series* a, const theta2_series* b,
                      theta2_series** out);
int theta2_series_square(const theta2_series* s, theta2_series** out);
/* Keeps exponents congruent to j mod q (q a power of two). */
int theta2_series_project(const theta2_series* s, uint64_t q, uint64_t j,
                          theta2_series** out);
/* Evaluates a theta-ring expression such as "[1]^5+[2]^5+[1][2]" or
 * "P(8,0; inv([1]))" at precision max_exp. */
int theta2_series_eval(int64_t l, const char* expression, int64_t max_exp,
                       theta2_series** out);
int theta2_series_coeff(const theta2_series* s, int64_t n, int* bit);
int theta2_series_valuation(const theta2_series* s, int64_t* v);
int theta2_series_bound(const theta2_series* s, int64_t* bound);
int theta2_series_is_zero(const theta2_series* s, int* zero);
/* Dump format: "v=<valuation> E=<bound>\n<exponents...>\n". */
int theta2_series_dump(const theta2_series* s, char** out);
/* Space-separated exponents with coefficient 1 in [lo, hi). */
int theta2_series_support(const theta2_series* s, int64_t lo, int64_t hi,
                          char** out);
void theta2_series_free(theta2_series* s);

/* --- congruence class tables ---------------------------------------- */
/* JSON arrays; classes are {"residue":r,"modulus":m}. */
int theta2_exceptional_set(int64_t l, char** out_json);
int theta2_basic_classes(int64_t l, char** out_json);
int theta2_ustar_classes(int64_t l, char** out_json);
/* Residues mod `modulus` covered by the basic classes. */
int theta2_covered_residues(int64_t l, int64_t modulus, int64_t* count);

/* --- Groebner certificates ------------------------------------------ */
/* certified = 1 iff (N,v) = (N,u,v) for the quintic ideal N of l; this
 * proves that the quotient of the evaluations lies in the theta ring. */
int theta2_certify_quotient(const theta2_ctx* ctx, int64_t l, const char* u,
                            const char* v, int* certified);
/* member = 1 iff p lies in the quintic ideal extended by the additional
 * generators (extra_gens: '|'-separated polynomials, may be NULL). */
int theta2_ideal_member(const theta2_ctx* ctx, int64_t l, const char* p,
                        const char* extra_gens, int* member);
/* Quotient ladder: on success writes polynomial texts with
 * phi(u)/phi(v) = projection of 1/[r] onto j mod q. */
int theta2_quotient_ladder(int64_t l, int64_t r, uint64_t q, uint64_t j,
                           char** u_text, char** v_text);

/* --- verification catalog ------------------------------------------- */
/* Runs the identity catalog with optional filters (l_filter = 0 for all,
 * id_filter NULL or "" for all, trailing '*' for prefix match).  Writes
 * JSON-lines CheckReports and the fail / budget-exceeded / matched counts. */
int theta2_verify(const theta2_ctx* ctx, int64_t l_filter,
                  const char* id_filter, int64_t e_override, int include_slow,
                  char** out_jsonl, int64_t* failed, int64_t* budget_exceeded,
                  int64_t* matched);

/* --- density counts -------------------------------------------------- */
/* Among the first X integers n >= -r^2 with n = -r^2 (mod l) and
 * n = residue (mod modulus), counts members of B([r]). */
int theta2_density_count(const theta2_ctx* ctx, int64_t l, int64_t r,
                         int64_t residue, int64_t modulus, int64_t X,
                         int64_t* count);
/* Runs the whole built-in reference matrix; JSON rows with expected and
 * computed counts; mismatches = number of rows that differ. */
int theta2_density_reference(const theta2_ctx* ctx, char** out_json,
                             int64_t* mismatches);

/* --- elementary suites ----------------------------------------------- */
/* JSON-lines reports; failed = number of failing checks. */
int theta2_l3_suite(int64_t n_max, char** out_jsonl, int64_t* failed);
int theta2_partition_check(int64_t k_max, char** out_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* THETA2_H */
