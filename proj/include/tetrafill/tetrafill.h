/* Copyright 2026 The tetrafill Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the tetrafill library.
 *
 * Every function returns a tf_status. On failure, tf_last_error() holds a
 * message for the calling thread until its next failing call. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with tf_string_free. Handles are released with their *_free
 * function; passing NULL to a free function is a no-op.
 *
 * Qubits are numbered from 1. Amplitude index b encodes |q1 q2 ... qn> with
 * q1 the most significant bit.
 */

#ifndef TETRAFILL_TETRAFILL_H_
#define TETRAFILL_TETRAFILL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TETRAFILL_BUILDING)
#define TF_API __attribute__((visibility("default")))
#else
#define TF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
    TF_OK = 0,
    TF_ERR_INVALID_ARGUMENT = 1,
    TF_ERR_DIMENSION_MISMATCH = 2,
    TF_ERR_ZERO_VECTOR = 3,
    TF_ERR_NOT_UNITARY = 4,
    TF_ERR_PARSE = 5,
    TF_ERR_NON_CONVERGENCE = 6,
    TF_ERR_INFEASIBLE_PROFILE = 7,
    TF_ERR_INTERNAL_CONSISTENCY = 8,
    TF_ERR_UNSUPPORTED = 9,
    TF_ERR_IO = 10,
    TF_ERR_UNKNOWN = 99
} tf_status;

typedef enum tf_degeneracy {
    TF_DEGENERACY_GENERIC = 0,
    TF_DEGENERACY_TWO_TO_OTHER_BISEP = 1,
    TF_DEGENERACY_ONE_TO_OTHER_BISEP = 2,
    TF_DEGENERACY_COPLANAR_IMPOSSIBLE = 3,
    TF_DEGENERACY_PRODUCT_DOT = 4
} tf_degeneracy;

typedef struct tf_state tf_state;
typedef struct tf_mixed_state tf_mixed_state;

typedef struct tf_complex {
    double re;
    double im;
} tf_complex;

typedef struct tf_solver_options {
    double tol;
    int max_iter;
    int restarts;
    uint64_t seed;
} tf_solver_options;

typedef struct tf_profile {
    double one_to_other[4];
    /* cuts 12|34, 13|24, 14|23 */
    double two_to_other[3];
} tf_profile;

typedef struct tf_sigma {
    /* pairs 12, 13, 14, 23, 24, 34 */
    double sigma[6];
    double lambda;
    double residual;
    int iterations;
    int degenerate;
} tf_sigma;

typedef struct tf_measure_report {
    double f4;
    double gmc;
    double gbc;
    double cyclic_quad_area;
    double volume;
    tf_degeneracy degeneracy;
    tf_profile profile;
    tf_sigma sigma;
} tf_measure_report;

typedef struct tf_verify_options {
    int samples;
    uint64_t seed;
    int restarts;
    int unitaries;
    int threads; /* 0: hardware concurrency */
    tf_solver_options solver;
} tf_verify_options;

typedef struct tf_convex_roof_options {
    int ensemble_size; /* 0: automatic */
    int budget;
    int starts;
    uint64_t seed;
    tf_solver_options solver;
} tf_convex_roof_options;

TF_API const char *tf_version(void);
TF_API const char *tf_last_error(void);
TF_API const char *tf_status_name(tf_status status);
TF_API void tf_string_free(char *s);

TF_API tf_solver_options tf_solver_options_default(void);
TF_API tf_verify_options tf_verify_options_default(void);
TF_API tf_convex_roof_options tf_convex_roof_options_default(void);

/* Pure states. */
TF_API tf_status tf_state_from_amplitudes(int n_qubits, const tf_complex *amplitudes, size_t count, tf_state **out);
/* Names: ghz4, cluster4, w4, ghz3, w3, product4, bisep-one-to-other,
 * bisep-two-to-two, bisep-one-one-two. */
TF_API tf_status tf_state_named(const char *name, tf_state **out);
TF_API tf_status tf_state_haar(int n_qubits, uint64_t seed, tf_state **out);
/* `left` lists the 1-based qubits on one side of a 4-qubit cut. */
TF_API tf_status tf_state_biseparable(const int *left, size_t left_count, uint64_t seed, tf_state **out);
TF_API tf_status tf_state_from_json(const char *json, tf_state **out);
TF_API tf_status tf_state_to_json(const tf_state *state, char **out);
TF_API int tf_state_qubits(const tf_state *state);
/* Copies min(count, 2^n) amplitudes and reports 2^n in *written if non-NULL. */
TF_API tf_status tf_state_amplitudes(const tf_state *state, tf_complex *out, size_t count, size_t *written);
/* `u` is a row-major 2x2 unitary. Returns a new state. */
TF_API tf_status tf_state_apply_local_unitary(const tf_state *state, int qubit, const tf_complex u[4],
                                              tf_state **out);
/* perm[k] is the old qubit placed at position k + 1. */
TF_API tf_status tf_state_permute(const tf_state *state, const int *perm, size_t count, tf_state **out);
TF_API void tf_state_free(tf_state *state);

/* Concurrences. */
TF_API tf_status tf_profile_of(const tf_state *state, tf_profile *out);
TF_API tf_status tf_profile_with_factor(const tf_state *state, double two_to_other_factor, tf_profile *out);
TF_API tf_status tf_pairwise(const tf_state *state, double out[6]);
/* *holds is 1 when the inequality holds; margins may be NULL. */
TF_API tf_status tf_simplex_check(const tf_profile *profile, int *holds, double margins[4]);
TF_API tf_status tf_monogamy_check(const tf_state *state, int *holds, double slack[4]);

/* Tetrahedron. */
TF_API tf_status tf_solve_sigma(const tf_profile *profile, const tf_solver_options *options, tf_sigma *out);
TF_API tf_status tf_volume(const double sigma[6], double *out);
TF_API const char *tf_degeneracy_name(tf_degeneracy degeneracy);

/* Measures. options may be NULL for defaults. */
TF_API tf_status tf_measure(const tf_state *state, const tf_solver_options *options, tf_measure_report *out);
TF_API tf_status tf_measure_json(const tf_state *state, const tf_solver_options *options, char **out);
TF_API tf_status tf_f4_of_profile(const tf_profile *profile, const tf_solver_options *options, double *out);
TF_API tf_status tf_f3(const tf_state *state, double *out);
TF_API tf_status tf_cyclic_quad_area(const tf_profile *profile, double *out);

/* Commands. format: "json" or "tsv" for tables, "obj" or "json" for meshes. */
TF_API tf_status tf_compare(const tf_state *a, const tf_state *b, const tf_solver_options *options,
                            const char *format, char **out);
/* Suites: simplex, monogamy, uniqueness, invariance, genuine. *failed
 * receives the number of failing samples. */
TF_API tf_status tf_verify(const char *suite, const tf_verify_options *options, char **out_json, int *failed);
TF_API tf_status tf_export_geometry(const tf_state *state, const char *format, const tf_solver_options *options,
                                    char **out);

/* Mixed states. */
TF_API tf_status tf_mixed_from_json(const char *json, tf_mixed_state **out);
TF_API tf_status tf_mixed_from_state(const tf_state *state, tf_mixed_state **out);
TF_API int tf_mixed_rank(const tf_mixed_state *rho);
TF_API tf_status tf_convex_roof(const tf_mixed_state *rho, const tf_convex_roof_options *options, double *value,
                                char **out_json);
TF_API void tf_mixed_free(tf_mixed_state *rho);

#ifdef __cplusplus
}
#endif

#endif /* TETRAFILL_TETRAFILL_H_ */
