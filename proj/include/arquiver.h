/* C interface to the cluster-category translation-quiver library.
 *
 * All functions returning arq_status follow the same protocol: ARQ_OK (0) on
 * success, a nonzero code otherwise, with a human-readable explanation
 * available from arq_last_error() (thread local, valid until the next failing
 * call on the same thread). Output strings are heap allocated and must be
 * released with arq_string_free; integer arrays with arq_ints_free; quiver
 * handles with arq_quiver_free.
 */

#ifndef ARQUIVER_H
#define ARQUIVER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arq_status {
  ARQ_OK = 0,
  ARQ_INVALID_ARGUMENT = 1,
  ARQ_INVALID_RANK = 2,
  ARQ_NO_SUCH_AUTOMORPHISM = 3,
  ARQ_DIAGRAM_MISMATCH = 4,
  ARQ_NOT_RIGHTWARD = 5,
  ARQ_NOT_TAU_STABLE = 6,
  ARQ_MISSING_COVERING_DATA = 7,
  ARQ_WINDOW_TOO_SMALL = 8,
  ARQ_HYPOTHESIS_VIOLATED = 9,
  ARQ_RANK_TOO_SMALL = 10,
  ARQ_SHAPE_MISMATCH = 11,
  ARQ_PARSE_ERROR = 12,
  ARQ_INTERNAL = 13
} arq_status;

typedef struct arq_quiver arq_quiver;

const char* arq_status_name(arq_status s);
const char* arq_last_error(void);

void arq_string_free(char* s);
void arq_ints_free(int* xs);
void arq_quiver_free(arq_quiver* q);

/* family is 'A', 'D' or 'E'; level is the cluster parameter u >= 1. */
arq_status arq_cluster_quiver(char family, int rank, int level,
                              arq_quiver** out);

arq_status arq_quiver_from_json(const char* text, arq_quiver** out);
arq_status arq_quiver_to_json(const arq_quiver* q, char** out);
arq_status arq_quiver_to_dot(const arq_quiver* q, char** out);
arq_status arq_quiver_to_text(const arq_quiver* q, char** out);

int arq_quiver_size(const arq_quiver* q); /* -1 on a null handle */
arq_status arq_quiver_vertex_name(const arq_quiver* q, int v, char** out);

/* Deletion of a tau-stable vertex set selected by residue rows or by
 * tau-orbit indices. Fails with ARQ_NOT_TAU_STABLE (witness in the error
 * message) when the selected set is not closed under the translation. */
arq_status arq_delete_rows(const arq_quiver* q, const int* rows, int count,
                           arq_quiver** out);
arq_status arq_delete_orbits(const arq_quiver* q, const int* orbit_ids,
                             int count, arq_quiver** out);

/* *isomorphic is set to 1 or 0. When isomorphic and witness is non-NULL,
 * *witness receives a malloc'd array of length arq_quiver_size(a) mapping
 * vertices of a to vertices of b (lexicographically least such map). */
arq_status arq_isomorphism(const arq_quiver* a, const arq_quiver* b,
                           int* isomorphic, int** witness);

/* Hom dimension between two vertices of the mesh category. use_oracle = 0
 * computes through the covering data (fails with ARQ_MISSING_COVERING_DATA on
 * deleted quivers); use_oracle = 1 runs the path-space computation, which on
 * a deleted quiver works through its recorded ancestor. */
arq_status arq_hom_dim(const arq_quiver* q, int x, int y, int use_oracle,
                       int* dim);

/* Full Hom matrix serialized as JSON. */
arq_status arq_hom_matrix_json(const arq_quiver* q, int use_oracle,
                               char** out);

/* Verification of one quotient construction. case_name is "A", "D",
 * "E7_from_E8", "E6_from_E8" or "E6_from_E7"; m and n are ignored for the
 * three exceptional cases. text_format selects the human-readable rendering
 * instead of JSON. *ok reports whether the verification succeeded; the
 * function itself fails only on invalid input or violated hypotheses. */
arq_status arq_verify(const char* case_name, int u, int v, int m, int n,
                      int check_hom, int text_format, int* ok, char** report);

/* Ambient parameters (v, n) realizing the rank-m level-u cluster quiver as a
 * quotient; family is 'A' or 'D'. */
arq_status arq_corollary_params(char family, int u, int m, int* v, int* n);

/* Exhaustive tau-orbit-subset search; *count receives the number of
 * witnesses found (0 is a meaningful negative answer). */
arq_status arq_search(char source_family, int source_rank, int source_level,
                      char target_family, int target_rank, int target_level,
                      int text_format, int* count, char** result);

#ifdef __cplusplus
}
#endif

#endif /* ARQUIVER_H */
