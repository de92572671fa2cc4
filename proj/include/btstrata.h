#ifndef BTSTRATA_H
#define BTSTRATA_H

/*
 * C interface to the bt-strata library. All computations are exact; every
 * function returning a result writes a heap-allocated JSON document (the
 * versioned output envelope, schema "bt-strata/1") through out_json. Free it
 * with bts_free_string. On failure the return code classifies the error and
 * bts_last_error(ctx) holds a message.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bts_ctx bts_ctx;

enum bts_status {
  BTS_OK = 0,
  BTS_ERR_DOMAIN = 1,
  BTS_ERR_USAGE = 2,
  BTS_ERR_BUDGET = 3
};

/* Context creation honors the BT_STRATA_BUDGET environment variable. */
bts_ctx* bts_ctx_new(void);
void bts_ctx_free(bts_ctx* ctx);

/* budget = 0 restores the built-in enumeration caps. */
void bts_ctx_set_budget(bts_ctx* ctx, uint64_t budget);

/* Message for the most recent failing call on this context. */
const char* bts_last_error(const bts_ctx* ctx);

void bts_free_string(char* s);

const char* bts_schema_version(void);

/* Counting formulas. p arguments are decimal strings (arbitrary precision);
 * pass NULL for p to stay symbolic where supported. */
int bts_nu(bts_ctx* ctx, int r, int d, const char* p, char** out_json);
int bts_order(bts_ctx* ctx, int d, char** out_json);
int bts_strata(bts_ctx* ctx, int n, int theta, int above, int dim, char** out_json);

/* Apartment lattices. coords lists r_{-m},...,r_{-1},r_1,...,r_m. */
int bts_lattice_check(bts_ctx* ctx, int n, int level, const int* coords, int ncoords,
                      char** out_json);
int bts_lattice_type(bts_ctx* ctx, int n, int level, const int* coords, int ncoords,
                     char** out_json);
int bts_lattice_dual(bts_ctx* ctx, int n, int level, const int* coords, int ncoords,
                     char** out_json);
int bts_lattice_intersect(bts_ctx* ctx, int n, int level, const int* coords_a, int na,
                          const int* coords_b, int nb, char** out_json);

/* Partition combinatorics. parts is a weakly decreasing list. */
int bts_partition_hooks(bts_ctx* ctx, const int* parts, int nparts, char** out_json);
int bts_partition_degree(bts_ctx* ctx, const int* parts, int nparts, char** out_json);
int bts_partition_two_core(bts_ctx* ctx, const int* parts, int nparts, char** out_json);
int bts_partition_class(bts_ctx* ctx, const int* parts, int nparts, char** out_json);

/* Cohomology tables. */
int bts_stratum(bts_ctx* ctx, int theta, const char* p, char** out_json);
int bts_tube(bts_ctx* ctx, int n, int theta, char** out_json);

/* Spectral sequence. mode is "closed" or "bruteforce". */
int bts_kmult(bts_ctx* ctx, int n, int theta, int s, const char* p, int closed_form,
              char** out_json);
int bts_e1(bts_ctx* ctx, int n, const char* p, const char* mode, char** out_json);
int bts_e2_known(bts_ctx* ctx, int n, char** out_json);
int bts_report(bts_ctx* ctx, int n, const char* p, char** out_json);

/* Basic-stratum decomposition; roster_json is the full roster document. */
int bts_basic(bts_ctx* ctx, const char* roster_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* BTSTRATA_H */
