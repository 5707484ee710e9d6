/*
 * Copyright 2026 The lps Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to liblps: stable models of normal and cardinality-constraint
 * programs computed through proof schemes and defining equations.
 *
 * Every entry point returns an lps_status. On failure the thread-local
 * message returned by lps_last_error() describes the problem. Objects are
 * opaque and owned by the caller once returned; release them with the
 * matching *_free function. Reports are produced as JSON (default) or plain
 * text and handed back in an lps_output.
 */

#ifndef LPS_LPS_H
#define LPS_LPS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LPS_API __declspec(dllexport)
#else
#define LPS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lps_status {
    LPS_OK = 0,
    LPS_ERR_SYNTAX = 1,
    LPS_ERR_COMPOUND_HEAD = 2,
    LPS_ERR_USAGE = 3,
    LPS_ERR_TOO_MANY_ATOMS = 4,
    LPS_ERR_SUPPORT_EXPLOSION = 5,
    LPS_ERR_TIMEOUT = 6,
    LPS_ERR_NOT_HORN = 7,
    LPS_ERR_NOT_PURELY_NEGATIVE = 8,
    LPS_ERR_NOT_ANTIMONOTONE = 9,
    LPS_ERR_NOT_DECREASING = 10,
    LPS_ERR_UNKNOWN_ATOM = 11,
    LPS_ERR_IO = 12,
    LPS_ERR_INTERNAL = 13
} lps_status;

typedef enum lps_format { LPS_FORMAT_JSON = 0, LPS_FORMAT_TEXT = 1 } lps_format;

typedef enum lps_method {
    LPS_METHOD_EQUATIONS = 0,
    LPS_METHOD_BRUTEFORCE = 1,
    LPS_METHOD_SCHEMES = 2,
    LPS_METHOD_BOTH = 3
} lps_method;

typedef enum lps_family { LPS_FAMILY_E2 = 0, LPS_FAMILY_EX3 = 1 } lps_family;

typedef struct lps_program lps_program;
typedef struct lps_options lps_options;
typedef struct lps_output lps_output;

/* Status name ("LPS_OK", ...). Never NULL. */
LPS_API const char* lps_status_name(lps_status status);
/* Message for the last failure on this thread; empty after success. */
LPS_API const char* lps_last_error(void);
/* 1 for usage and syntax failures, 0 otherwise. */
LPS_API int lps_status_is_usage(lps_status status);

/* --- programs --- */

/* Parses a normal program. */
LPS_API lps_status lps_program_parse(const char* text, lps_program** out);
/* Parses a cardinality-constraint program. */
LPS_API lps_status lps_cc_program_parse(const char* text, lps_program** out);
LPS_API void lps_program_free(lps_program* program);
LPS_API int lps_program_is_cc(const lps_program* program);
LPS_API size_t lps_program_atom_count(const lps_program* program);
/* Borrowed pointer, valid while the program lives. NULL when out of range. */
LPS_API const char* lps_program_atom_name(const lps_program* program, size_t index);

/* GL_P(M) (CCGL_P(M) for CC programs) on atom indices. `out` receives at
 * most `capacity` indices; `out_count` always gets the full size. */
LPS_API lps_status lps_program_gl(const lps_program* program, const size_t* model, size_t model_count,
                                  size_t* out, size_t capacity, size_t* out_count);
LPS_API lps_status lps_program_is_stable(const lps_program* program, const size_t* model, size_t model_count,
                                         int* stable);

/* --- options --- */

LPS_API lps_options* lps_options_new(void);
LPS_API void lps_options_free(lps_options* options);
LPS_API void lps_options_set_format(lps_options* options, lps_format format);
/* Atom limit for exhaustive sweeps (default 20). */
LPS_API void lps_options_set_max_atoms(lps_options* options, size_t max_atoms);
/* 0 disables the timeout (default). */
LPS_API void lps_options_set_timeout_ms(lps_options* options, uint64_t timeout_ms);
LPS_API void lps_options_set_seed(lps_options* options, uint64_t seed);

/* --- reports --- */

LPS_API const char* lps_output_text(const lps_output* output);
/* Newline-separated warnings, possibly empty. */
LPS_API const char* lps_output_warnings(const lps_output* output);
LPS_API void lps_output_free(lps_output* output);

/* Stable models. LPS_METHOD_BOTH runs every method and reports agreement. */
LPS_API lps_status lps_solve(const lps_program* program, const lps_options* options, lps_method method,
                             lps_output** out);
/* Stability of a comma-separated model plus GL of it. */
LPS_API lps_status lps_check(const lps_program* program, const lps_options* options, const char* model,
                             lps_output** out);
/* GL reduct (NSS reduct for CC programs) with respect to a comma-separated model. */
LPS_API lps_status lps_reduct(const lps_program* program, const lps_options* options, const char* model,
                              lps_output** out);
/* Irredundant proof schemes for `atom` up to `max_steps` steps. */
LPS_API lps_status lps_schemes(const lps_program* program, const lps_options* options, const char* atom,
                               size_t max_steps, lps_output** out);
/* Support family per atom; minimal != 0 keeps only minimal supports. */
LPS_API lps_status lps_supports(const lps_program* program, const lps_options* options, int minimal,
                                lps_output** out);
/* Defining equations; reduced != 0 for the reduced theory. When cnf_path is
 * non-NULL the clausal translation is written there in DIMACS form. */
LPS_API lps_status lps_equations(const lps_program* program, const lps_options* options, int reduced,
                                 const char* cnf_path, lps_output** out);

/* Realizes antimonotone operator tables as programs and checks GL == table.
 * exhaustive != 0 enumerates every table (atoms <= 3); otherwise `samples`
 * random tables are drawn with the options' seed. */
LPS_API lps_status lps_lab_realize(const lps_options* options, size_t atoms, int exhaustive, size_t samples,
                                   lps_output** out);
/* Minimal-support counts of atom p for the family at n = 1..n_max. */
LPS_API lps_status lps_lab_fsp(const lps_options* options, lps_family family, size_t n_max, lps_output** out);
/* Antimonotonicity of the GL table of a program (at most 5 atoms). */
LPS_API lps_status lps_lab_antimono(const lps_program* program, const lps_options* options, lps_output** out);

#ifdef __cplusplus
}
#endif

#endif /* LPS_LPS_H */
