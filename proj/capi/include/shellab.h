/* C interface to the maximal chain descent order library.
 *
 * All functions return a shellab_status. SHELLAB_OK means success and, for
 * predicate-style calls, a true verdict; SHELLAB_FALSE is a successful call
 * whose verdict is false. Reports are returned as JSON strings owned by the
 * library; release them with shellab_string_free. Handles are opaque and
 * released with their matching _free function.
 */
#ifndef SHELLAB_H
#define SHELLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SHELLAB_OK = 0,
  SHELLAB_FALSE = 1,
  SHELLAB_ERR_INPUT = 2,
  SHELLAB_ERR_INTERNAL = 3
} shellab_status;

typedef struct shellab_bundle shellab_bundle;
typedef struct shellab_mcd shellab_mcd;

const char* shellab_version(void);
void shellab_string_free(char* s);
void shellab_bundle_free(shellab_bundle* b);
void shellab_mcd_free(shellab_mcd* m);

/* Parse a bundle: {"poset":..., "label_poset":..., "labeling":...}. */
shellab_status shellab_bundle_parse(const char* json, shellab_bundle** out, char** errmsg);

/* Generators. `spec` examples:
 *   {"family":"boolean","n":3}
 *   {"family":"partition","n":4,"labeling":"maxmin"}
 *   {"family":"partition","n":4,"labeling":"minimal","atom_order":["12.3.4","34.1.2"]}
 *   {"family":"young","shape":[3,2,1],"inner":[],"tableau":[[1,4,6],[2,5],[3]]}
 *   {"family":"jp","poset":{...},"extension":["a","b","c"]}
 */
shellab_status shellab_bundle_family(const char* spec, shellab_bundle** out, char** errmsg);

/* Bundled fixtures: fig2, fig3, fig5_cl, fig6_lambda, fig7, prop_inv_vs_strong. */
shellab_status shellab_bundle_fixture(const char* name, shellab_bundle** out, char** errmsg);

char* shellab_bundle_json(const shellab_bundle* b);
char* shellab_bundle_dot(const shellab_bundle* b);

/* EL/CL axiom check; kind is "el" or "cl". OK valid, FALSE invalid. */
shellab_status shellab_validate(const shellab_bundle* b, const char* kind, char** report_json);

shellab_status shellab_mcd_build(const shellab_bundle* b, shellab_mcd** out, char** errmsg);
char* shellab_mcd_json(const shellab_bundle* b, const shellab_mcd* m);
char* shellab_mcd_dot(const shellab_bundle* b, const shellab_mcd* m);

/* Verdict calls: OK = property holds, FALSE = it does not. */
shellab_status shellab_polygon_complete(const shellab_bundle* b, const shellab_mcd* m,
                                        char** report_json);
shellab_status shellab_inversion_ranked(const shellab_bundle* b, char** report_json);
shellab_status shellab_polygon_strong(const shellab_bundle* b, char** report_json);

/* order_json: array of chains, each an array of element names. */
shellab_status shellab_shelling_check(const shellab_bundle* b, const char* order_json,
                                      char** report_json);

/* Equivalence audit between linear extensions of the descent order and
 * shellings with descent restriction maps. OK = zero mismatches. */
shellab_status shellab_equivalence_audit(const shellab_bundle* b, uint64_t seed,
                                         int exhaustive_threshold, char** report_json);

/* Easy non-cover witness plus characterization witnesses for every non-cover
 * move. OK always unless the input fails to build. */
shellab_status shellab_witnesses(const shellab_bundle* b, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SHELLAB_H */
