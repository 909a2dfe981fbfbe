#ifndef HWEYL_H
#define HWEYL_H

/* C interface to the hom-associative Weyl algebra library.
 *
 * Every function returns an hw_status. Objects are opaque and owned by the
 * caller once returned through an out-parameter; release them with the
 * matching *_free function. Strings returned through char** are
 * heap-allocated and released with hw_string_free. On failure the out
 * parameters are left untouched and hw_last_error_message() describes the
 * problem (per thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HW_API __declspec(dllexport)
#else
#define HW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hw_status {
  HW_OK = 0,
  HW_CHECK_FAILED = 1,        /* reserved for callers; never returned */
  HW_ERR_PARSE = 2,           /* malformed expression or rational */
  HW_ERR_DIMENSION = 3,       /* operands of different dimension, n == 0 */
  HW_ERR_INDEX = 4,           /* generator or parameter index out of range */
  HW_ERR_CLASSIFICATION = 5,  /* twist vectors with different nonzero counts */
  HW_ERR_STRUCTURE = 6,       /* images not of the decomposable shape */
  HW_ERR_ARGUMENT = 7,        /* null pointer, zero input where nonzero needed */
  HW_ERR_INTERNAL = 8
} hw_status;

typedef struct hw_poly hw_poly;     /* element of A_n */
typedef struct hw_twist hw_twist;   /* twist vector k in Q^n */
typedef struct hw_images hw_images; /* generator images of a candidate morphism */
typedef struct hw_series hw_series; /* polynomial in formal parameters over A_n */

HW_API const char* hw_version(void);
HW_API const char* hw_status_name(hw_status status);
HW_API const char* hw_last_error_message(void);
/* Byte offset of the last parse error, or -1. */
HW_API long hw_last_error_position(void);
HW_API void hw_string_free(char* s);

/* ---- twist vectors ---- */

/* "1,0,-3/2" */
HW_API hw_status hw_twist_parse(const char* text, hw_twist** out);
HW_API hw_status hw_twist_zero(size_t n, hw_twist** out);
HW_API void hw_twist_free(hw_twist* k);
HW_API size_t hw_twist_dim(const hw_twist* k);
HW_API hw_status hw_twist_to_string(const hw_twist* k, char** out);
HW_API size_t hw_twist_nonzero_count(const hw_twist* k);

/* ---- polynomials ---- */

/* Parses an expression in A_n^k, n = dim(k). Star products use k. */
HW_API hw_status hw_poly_parse(const char* text, const hw_twist* k, hw_poly** out);
HW_API void hw_poly_free(hw_poly* p);
HW_API size_t hw_poly_dim(const hw_poly* p);
HW_API int hw_poly_is_zero(const hw_poly* p);
HW_API int hw_poly_equal(const hw_poly* a, const hw_poly* b);
/* Canonical text, e.g. "y1*x1 + x1 + 1". */
HW_API hw_status hw_poly_to_string(const hw_poly* p, char** out);

HW_API hw_status hw_mul(const hw_poly* a, const hw_poly* b, hw_poly** out);
HW_API hw_status hw_star(const hw_twist* k, const hw_poly* a, const hw_poly* b, hw_poly** out);
/* alpha_k^power(p); negative powers use alpha_{-k}. */
HW_API hw_status hw_twist_apply(const hw_twist* k, long power, const hw_poly* p, hw_poly** out);
/* ab - ba */
HW_API hw_status hw_commutator(const hw_poly* a, const hw_poly* b, hw_poly** out);
/* a*b - b*a */
HW_API hw_status hw_commutator_star(const hw_twist* k, const hw_poly* a, const hw_poly* b, hw_poly** out);
/* (a*b)*c - a*(b*c) */
HW_API hw_status hw_associator_star(const hw_twist* k, const hw_poly* a, const hw_poly* b, const hw_poly* c,
                                    hw_poly** out);
/* alpha(a)*(b*c) - (a*b)*alpha(c) */
HW_API hw_status hw_hom_assoc_defect(const hw_twist* k, const hw_poly* a, const hw_poly* b, const hw_poly* c,
                                     hw_poly** out);

/* ---- structure ---- */

/* JSON {"steps":[{"step":"[x1,.]","result":"..."}...],"scalar":"2"}. */
HW_API hw_status hw_reduce_json(const hw_twist* k, const hw_poly* p, char** json);
/* JSON with the structural verdict and the 2n+1 generator defects.
 * *is_derivation receives the structural verdict. */
HW_API hw_status hw_derivation_check_json(const hw_twist* k, const hw_poly* p, int* is_derivation, char** json);

/* ---- morphisms ---- */

HW_API hw_status hw_iso(const hw_twist* k, const hw_twist* k2, hw_images** out);
HW_API hw_status hw_inverse_iso(const hw_twist* k, const hw_twist* k2, hw_images** out);
/* x[i], y[i] are the images of x_{i+1}, y_{i+1}; all of dimension n. */
HW_API hw_status hw_images_new(size_t n, const hw_poly* const* x, const hw_poly* const* y, hw_images** out);
HW_API void hw_images_free(hw_images* phi);
HW_API size_t hw_images_dim(const hw_images* phi);
/* which = 'x' or 'y'; index is 1-based. */
HW_API hw_status hw_images_get(const hw_images* phi, char which, size_t index, hw_poly** out);
HW_API hw_status hw_apply_morphism(const hw_images* phi, const hw_poly* p, hw_poly** out);
/* JSON with both checkers' per-equation results. *accepted receives the
 * relation checker's verdict, *agree whether the equation-set checker agrees. */
HW_API hw_status hw_morphism_check_json(const hw_twist* k, const hw_twist* k2, const hw_images* phi, int* accepted,
                                        int* agree, char** json);

/* ---- formal deformation ---- */

/* positions[s] is the 1-based y index carrying parameter t_{s+1}. */
HW_API hw_status hw_deform_star(const hw_poly* a, const hw_poly* b, const size_t* positions, size_t m,
                                hw_series** out);
HW_API hw_status hw_deform_bracket(const hw_poly* a, const hw_poly* b, const size_t* positions, size_t m,
                                   hw_series** out);
HW_API hw_status hw_deform_twist(const hw_poly* a, const size_t* positions, size_t m, hw_series** out);
HW_API void hw_series_free(hw_series* s);
HW_API hw_status hw_series_to_string(const hw_series* s, char** out);
/* JSON array of {"order":[i1..im],"coefficient":"..."}. */
HW_API hw_status hw_series_terms_json(const hw_series* s, char** json);
/* values: m rationals. */
HW_API hw_status hw_series_specialize(const hw_series* s, const char* const* values, size_t m, hw_poly** out);

/* ---- property suites ---- */

/* Runs the ten property suites. degree_cap == 0 keeps the defaults.
 * JSON array of {"id","title","passed","cases","seconds","detail"}. */
HW_API hw_status hw_selftest_json(uint64_t seed, unsigned degree_cap, double count_scale, int* all_passed,
                                  char** json);

#ifdef __cplusplus
}
#endif

#endif
