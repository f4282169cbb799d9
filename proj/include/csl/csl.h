/*
 * csl: cusp-symmetry library, C interface.
 *
 * Objects are opaque handles created by csl_*_create functions and released
 * with the matching csl_*_destroy. Every fallible call returns a csl_status;
 * on failure csl_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread).
 *
 * Functions producing text take (buf, cap, needed): *needed receives the
 * length including the terminating NUL, and CSL_ERR_BUFFER_TOO_SMALL is
 * returned when cap < *needed. Passing buf = NULL, cap = 0 queries the size.
 */
#ifndef CSL_CSL_H
#define CSL_CSL_H

#include <stddef.h>
#include <stdint.h>

#if defined(CSL_BUILDING_LIBRARY)
#define CSL_API __attribute__((visibility("default")))
#else
#define CSL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csl_status {
  CSL_OK = 0,
  CSL_ERR_INVALID_ARGUMENT = 1,
  CSL_ERR_NOT_PRIME = 2,
  CSL_ERR_NOT_PRIME_POWER = 3,
  CSL_ERR_MISMATCHED_FIELD = 4,
  CSL_ERR_DEGREE_MISMATCH = 5,
  CSL_ERR_CAP_EXCEEDED = 6,
  CSL_ERR_OUT_OF_RANGE = 7,
  CSL_ERR_NOT_CYCLIC = 8,
  CSL_ERR_SPHERICAL = 9,
  CSL_ERR_NOT_PRIMITIVE = 10,
  CSL_ERR_NO_CONVERGENCE = 11,
  CSL_ERR_BUFFER_TOO_SMALL = 12,
  CSL_ERR_INTERNAL = 99
} csl_status;

typedef struct csl_field csl_field;
typedef struct csl_group csl_group;
typedef struct csl_map csl_map;
typedef struct csl_link csl_link;

CSL_API const char* csl_version(void);
CSL_API const char* csl_status_string(csl_status status);
CSL_API const char* csl_last_error(void);

/* Element cap for group closures made through this interface (process-wide;
 * default 1000000). */
CSL_API void csl_set_group_cap(uint64_t cap);
CSL_API uint64_t csl_get_group_cap(void);

/* ---- finite fields ---------------------------------------------------- */

CSL_API csl_status csl_field_create(int p, int k, csl_field** out);
CSL_API csl_status csl_field_create_order(int n, csl_field** out);
CSL_API void csl_field_destroy(csl_field* field);
CSL_API int csl_field_order(const csl_field* field);
/* Elements travel as "c0,c1,...,c(k-1)" strings. */
CSL_API csl_status csl_field_modulus(const csl_field* field, char* buf, size_t cap, size_t* needed);
CSL_API csl_status csl_field_add(const csl_field* field, const char* a, const char* b,
                                 char* buf, size_t cap, size_t* needed);
CSL_API csl_status csl_field_mul(const csl_field* field, const char* a, const char* b,
                                 char* buf, size_t cap, size_t* needed);
CSL_API csl_status csl_field_primitive(const csl_field* field, char* buf, size_t cap,
                                       size_t* needed);
/* Canonical index of an element string (its position in enumeration order). */
CSL_API csl_status csl_field_index(const csl_field* field, const char* element, int* out);

/* ---- permutation groups ----------------------------------------------- */

/* `images` holds generator_count image arrays of length `degree`, back to back. */
CSL_API csl_status csl_group_create(size_t degree, const uint32_t* images,
                                    size_t generator_count, csl_group** out);
CSL_API csl_status csl_affine_group_create(const csl_field* field, csl_group** out);
CSL_API void csl_group_destroy(csl_group* group);
CSL_API size_t csl_group_degree(const csl_group* group);
CSL_API csl_status csl_group_order(const csl_group* group, uint64_t* out);
CSL_API csl_status csl_group_is_k_transitive(const csl_group* group, size_t k, int* out);
CSL_API csl_status csl_group_transitivity_degree(const csl_group* group, size_t* out);
CSL_API csl_status csl_group_json(const csl_group* group, char* buf, size_t cap, size_t* needed);

/* ---- regular maps ----------------------------------------------------- */

typedef struct csl_map_summary {
  int n;
  int vertices;
  int edges;
  int faces;
  int euler;
  int genus;
  int formula_genus; /* -1 when not applicable */
  int vertex_degree; /* -1 when vertices differ in degree */
} csl_map_summary;

CSL_API csl_status csl_genus_formula(int64_t n, int* out);
CSL_API csl_status csl_biggs_map_create(const csl_field* field, csl_map** out);
CSL_API void csl_map_destroy(csl_map* map);
CSL_API csl_status csl_map_get_summary(const csl_map* map, csl_map_summary* out);
CSL_API csl_status csl_map_face_adjacency_complete(const csl_map* map, int* out);
/* Builds the dart permutation (a,b) -> (s a + t, s b + t) for element
 * indices s != 0, t and reports whether it is a map automorphism. When
 * face_images is non-NULL it receives the induced face permutation (length n). */
CSL_API csl_status csl_map_affine_automorphism(const csl_map* map, const csl_field* field,
                                               int s, int t, int* is_automorphism,
                                               uint32_t* face_images);
CSL_API csl_status csl_map_json(const csl_map* map, char* buf, size_t cap, size_t* needed);
/* what = 0: face-adjacency graph, 1: darts. */
CSL_API csl_status csl_map_dot(const csl_map* map, int what, char* buf, size_t cap,
                               size_t* needed);

/* ---- link families ---------------------------------------------------- */

CSL_API csl_status csl_braid_permutation(int strands, const int* word, size_t length,
                                         uint32_t* images);
CSL_API csl_status csl_link_chain(int n, int t, csl_link** out);
CSL_API csl_status csl_link_braid_closure(int strands, const int* word, size_t length,
                                          int m, csl_link** out);
CSL_API csl_status csl_link_cube(csl_link** out);
CSL_API csl_status csl_link_cube_edge(csl_link** out);
CSL_API csl_status csl_link_icosahedral(csl_link** out);
CSL_API csl_status csl_link_helical(const csl_field* field, csl_link** out);
CSL_API void csl_link_destroy(csl_link* link);
CSL_API size_t csl_link_component_count(const csl_link* link);
CSL_API csl_status csl_link_symmetry_group(const csl_link* link, csl_group** out);
/* Blueprint JSON; helical links also carry a "helical" object. */
CSL_API csl_status csl_link_json(const csl_link* link, char* buf, size_t cap, size_t* needed);
CSL_API csl_status csl_polygon_radii(int p, int q, double* r1, double* r2, int* hyperbolic);

/* ---- train tracks ----------------------------------------------------- */

typedef struct csl_dilatation_report {
  double lambda;
  double lambda_inverse;
  double w;
  double z;
  double w_tilde;
  double z_tilde;
  double residual_ab_cd;
  double residual_df_ef;
  double residual_combined;
  double lambda_transpose;
} csl_dilatation_report;

/* Row-major dim x dim nonnegative matrix; `vector` receives dim entries. */
CSL_API csl_status csl_perron_eigen(const int64_t* entries, size_t dim, double tol,
                                    double* lambda, double* vector);
CSL_API csl_status csl_dilatation(double tol, csl_dilatation_report* out);
CSL_API csl_status csl_dilatation_json(double tol, char* buf, size_t cap, size_t* needed);
CSL_API csl_status csl_substitution_dot(char* buf, size_t cap, size_t* needed);

/* ---- census ----------------------------------------------------------- */

CSL_API csl_status csl_census_json(int lo, int hi, char* buf, size_t cap, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* CSL_CSL_H */
