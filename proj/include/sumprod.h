/* sumprod: exact sum-product growth laboratory.
 *
 * C API over the C++ core: opaque handles, integer status codes, and
 * string documents (JSON / CSV) for every structured input and output.
 * All strings returned through char** are heap-allocated and must be
 * released with sp_string_free; sets with sp_set_free; contexts with
 * sp_ctx_free. A context is not safe for concurrent calls.
 */
#ifndef SUMPROD_H
#define SUMPROD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t sp_status;

/* Status codes; mirrored by the CLI exit codes. */
#define SP_OK 0
#define SP_CHECK_FAILED 1    /* an assertion-grade check reported holds=false */
#define SP_BUDGET_EXCEEDED 2 /* enumeration/memory/brute-force budget hit */
#define SP_INVALID_INPUT 3   /* malformed input or violated precondition */
#define SP_INTERNAL_ERROR 4

typedef struct sp_ctx sp_ctx;
typedef struct sp_set sp_set;

typedef enum sp_budget {
  SP_BUDGET_COUNTER_ENTRIES = 0, /* max distinct keys in one multiplicity counter */
  SP_BUDGET_ENUMERATION = 1,     /* max boxed group slice size */
  SP_BUDGET_MATRIX_DIM = 2,      /* max cycle-count matrix dimension */
  SP_BUDGET_BRUTE_FORCE = 3,     /* max tuples visited by brute-force counts */
  SP_BUDGET_PAIR_OPS = 4         /* max membership probes in quotient graphs */
} sp_budget;

sp_ctx* sp_ctx_new(void);
void sp_ctx_free(sp_ctx* ctx);

/* Message for the most recent failing call on this context ("" if none). */
const char* sp_ctx_last_error(const sp_ctx* ctx);

sp_status sp_ctx_set_threads(sp_ctx* ctx, int32_t threads);
sp_status sp_ctx_set_budget(sp_ctx* ctx, sp_budget which, uint64_t value);

/* Set files: {"elements": [...]} or a bare element array. Elements:
 * {"sign": 1, "factors": {"2": 3}}, {"int": "360"}, or {"rat": "3/4"}. */
sp_status sp_set_parse(sp_ctx* ctx, const char* json_text, sp_set** out_set);

/* Family specs: {"kind": "geometric", "q": "2", "n": 10},
 * {"kind": "balog_wooley", "M": 8, "N": 4},
 * {"kind": "random_few_prime", "pool": [2,3,5], "k": 2, "e_max": 3,
 *  "size": 40, "seed": 7, "integer_mode": false},
 * {"kind": "explicit", "elements": [...]}. */
sp_status sp_set_generate(sp_ctx* ctx, const char* family_json, sp_set** out_set);

void sp_set_free(sp_set* set);
int64_t sp_set_size(const sp_set* set);

/* Canonical set file (ascending elements, family/seed metadata if known). */
sp_status sp_set_to_json(sp_ctx* ctx, const sp_set* set, char** out_json);

/* Exact growth statistics CSV for one set; ms lists the iterated orders. */
sp_status sp_stats_csv(sp_ctx* ctx, const sp_set* set, const int32_t* ms, size_t ms_len,
                       int32_t include_header, char** out_csv);

/* Covering certificate JSON. b may be NULL for the symmetric case B = A;
 * variant selects the prime-selection route (1 or 2). */
sp_status sp_cover(sp_ctx* ctx, const sp_set* a, const sp_set* b, int32_t k, int32_t l,
                   int32_t variant, char** out_certificate_json);

/* Solution-count scan CSV (H,nondegenerate_count,degenerate_count) for
 * {"a0": "1", "coeffs": ["1", "-1"]} over
 * {"generators": [{"int": "2"}], "torsion": true}. */
sp_status sp_sunit_scan(sp_ctx* ctx, const char* equation_json, const char* group_json,
                        const int64_t* h_values, size_t h_len, char** out_csv);

/* Randomized check suites: holder, interpolation, popular, shkredov,
 * asymmetric, cauchy_schwarz, all. Returns SP_CHECK_FAILED when any
 * assertion-grade report fails; outputs are produced either way.
 * out_jsonl/out_csv may be NULL when not wanted. */
sp_status sp_verify(sp_ctx* ctx, const char* suite, uint64_t seed, uint64_t instances,
                    uint64_t max_size, char** out_jsonl, char** out_csv);

/* The set-applicable checks for one supplied set. */
sp_status sp_verify_set(sp_ctx* ctx, const sp_set* set, char** out_jsonl, char** out_csv);

/* Sweep CSV for {"ms": [2], "families": [family-spec, ...]}. */
sp_status sp_sweep(sp_ctx* ctx, const char* grid_json, char** out_csv);

void sp_string_free(char* text);
const char* sp_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUMPROD_H */
