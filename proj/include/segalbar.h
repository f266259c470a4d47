#ifndef SEGALBAR_H
#define SEGALBAR_H

/*
 * C interface to the segalbar core library.
 *
 * Conventions:
 *   - every function returns a segalbar_status; out parameters are written
 *     only on SEGALBAR_OK unless noted otherwise
 *   - char** out parameters receive a NUL-terminated UTF-8 string owned by
 *     the caller; release it with segalbar_string_free
 *   - handle out parameters receive an owned object; release with the
 *     matching *_free function
 *   - on any non-OK status, segalbar_last_error() returns a description of
 *     the failure for the calling thread
 *   - maps are passed in the canonical textual notation, e.g. "3→2:[0,0,1]"
 *     or "2⇀1:[_,0]" (ASCII arrows "->" and "~>" are accepted); kinds are
 *     "total", "partial", "interval", "op"; "op" and "interval" inputs are
 *     given as the underlying total notation
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SEGALBAR_OK = 0,
  SEGALBAR_ERR_INVALID = 1,  /* precondition violated */
  SEGALBAR_ERR_PARSE = 2,    /* malformed notation or file */
  SEGALBAR_ERR_SHAPE = 3,    /* structural invariant violated */
  SEGALBAR_ERR_CHECK = 4,    /* a verified property fails */
  SEGALBAR_ERR_BOUND = 5,    /* size exceeds the documented bounds */
  SEGALBAR_ERR_INTERNAL = 6
} segalbar_status;

typedef struct segalbar_monoid segalbar_monoid;
typedef struct segalbar_sset segalbar_sset;
typedef struct segalbar_bisset segalbar_bisset;

const char* segalbar_last_error(void);
void segalbar_string_free(char* text);

/* ---- maps and functors ---- */

/* validates notation of the given kind and writes the canonical form */
segalbar_status segalbar_map_normalize(const char* kind, const char* text, char** out);

/* writes all arrows dom -> cod of the kind, one per line; count may be NULL */
segalbar_status segalbar_hom(const char* kind, int dom, int cod, char** out,
                             long long* count);

/* g after f; both maps must be of the given kind */
segalbar_status segalbar_compose(const char* kind, const char* f, const char* g, char** out);

/* block sum f ⊗ g for kinds "total" and "partial" */
segalbar_status segalbar_tensor(const char* kind, const char* f, const char* g, char** out);

/* functor on arrows: "j" eats op arrows (underlying total notation) and
 * writes an interval map, "h" eats interval maps and writes a partial map,
 * "hj" eats op arrows and writes a partial map */
segalbar_status segalbar_functor(const char* name, const char* text, char** out);

/* style is "ascii" or "dot" */
segalbar_status segalbar_render_map(const char* kind, const char* text, const char* style,
                                    char** out);

/* ---- monoids ---- */

segalbar_status segalbar_monoid_read(const char* json, segalbar_monoid** out);
segalbar_status segalbar_monoid_write(const segalbar_monoid* m, char** json);
void segalbar_monoid_free(segalbar_monoid* m);

/* ---- simplicial sets ---- */

segalbar_status segalbar_sset_read(const char* json, segalbar_sset** out);
segalbar_status segalbar_sset_write(const segalbar_sset* x, char** json);
void segalbar_sset_free(segalbar_sset* x);

segalbar_status segalbar_nerve(const segalbar_monoid* m, int trunc, segalbar_sset** out);

/* mode is "strict" or "bijective"; *pass reports the verdict and report
 * carries the per-level table; both are written whenever the check runs */
segalbar_status segalbar_segal_check(const segalbar_sset* x, const char* mode, int* pass,
                                     char** report);

/* *pass is 1 when no identity violations exist; report lists them */
segalbar_status segalbar_identities_check(const segalbar_sset* x, int* pass, char** report);

segalbar_status segalbar_reconstruct(const segalbar_sset* x, segalbar_monoid** out);

/* *pass is 1 when x is generator-for-generator equal to the nerve of m;
 * report carries the first counterexample otherwise */
segalbar_status segalbar_bar_equality(const segalbar_sset* x, const segalbar_monoid* m,
                                      int* pass, char** report);

segalbar_status segalbar_render_sset(const segalbar_sset* x, const char* segal_mode,
                                     char** out);

/* ---- bisimplicial sets ---- */

segalbar_status segalbar_bisset_read(const char* json, segalbar_bisset** out);
segalbar_status segalbar_bisset_write(const segalbar_bisset* x, char** json);
void segalbar_bisset_free(segalbar_bisset* x);

segalbar_status segalbar_double_nerve(const segalbar_monoid* m, int htrunc, int vtrunc,
                                      segalbar_bisset** out);

/* rows, the first column, and the naturality squares; mode as above */
segalbar_status segalbar_double_segal_check(const segalbar_bisset* x, const char* mode,
                                            int* pass, char** report);

/* *pass is 1 when both extracted products exist, agree, satisfy interchange,
 * and are commutative; report names them and carries any witness */
segalbar_status segalbar_eckmann_hilton(const segalbar_bisset* x, int* pass, char** report);

segalbar_status segalbar_render_bisset(const segalbar_bisset* x, const char* segal_mode,
                                       char** out);

/* ---- verification ---- */

/* writes the suite names, one per line */
segalbar_status segalbar_verify_suites(char** out);

/* runs the property suites; only may be NULL or a comma-separated subset of
 * suite names; *pass and report are written whenever the run completes */
segalbar_status segalbar_verify(int max_size, const char* only, int* pass, char** report);

#ifdef __cplusplus
}
#endif

#endif
