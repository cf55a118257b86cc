/* Copyright 2026 The varstar Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

/* C interface to varstar.
 *
 * Every object is an opaque handle owned by the caller and released with its
 * matching *_destroy function. Fallible calls return a vs_status; on failure
 * the output handle is left untouched and vs_last_error() describes the
 * problem for the calling thread. Strings returned through char** are UTF-8,
 * NUL-terminated and must be released with vs_string_free().
 */

#ifndef VARSTAR_H
#define VARSTAR_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(VARSTAR_BUILDING_LIBRARY)
#    define VARSTAR_API __declspec(dllexport)
#  else
#    define VARSTAR_API __declspec(dllimport)
#  endif
#else
#  define VARSTAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vs_status {
    VS_OK = 0,
    VS_ERR_NULL_ARGUMENT = 1,
    VS_ERR_INVALID_WORD = 2,
    VS_ERR_INVALID_INPUT = 3,
    VS_ERR_PRECONDITION = 4,
    VS_ERR_DECOMPOSITION = 5,
    VS_ERR_PARSE = 6,
    VS_ERR_INVARIANT = 7,
    VS_ERR_BOUND = 8,
    VS_ERR_INTERNAL = 9
} vs_status;

typedef enum vs_format {
    VS_FORMAT_TEXT = 0,
    VS_FORMAT_JSON = 1
} vs_format;

typedef struct vs_words vs_words;
typedef struct vs_complexity vs_complexity;
typedef struct vs_grammar vs_grammar;
typedef struct vs_equivalence vs_equivalence;
typedef struct vs_lemma vs_lemma;

VARSTAR_API const char* vs_version(void);
VARSTAR_API const char* vs_status_name(vs_status status);

/* Message of the last failed call on this thread; "" if none. */
VARSTAR_API const char* vs_last_error(void);
/* Location of the last VS_ERR_PARSE on this thread (1-based); 0 if none. */
VARSTAR_API void vs_last_parse_location(size_t* line, size_t* column);

VARSTAR_API void vs_string_free(char* s);

/* Word lists. Duplicates are kept here and removed by the computations. */
VARSTAR_API vs_status vs_words_create(vs_words** out);
VARSTAR_API void vs_words_destroy(vs_words* words);
VARSTAR_API vs_status vs_words_add(vs_words* words, const char* utf8);
VARSTAR_API size_t vs_words_size(const vs_words* words);
/* Length in symbols of the longest word; 0 for an empty list. */
VARSTAR_API size_t vs_words_max_length(const vs_words* words);
/* One word per line, each followed by '\n'. */
VARSTAR_API vs_status vs_words_render(const vs_words* words, char** out);
VARSTAR_API vs_status vs_family(const char* name, size_t n, vs_words** out);

/* Conjugacy classes of primitive roots. */
VARSTAR_API vs_status vs_classes_render(const vs_words* words, vs_format format, char** out);

/* Nonterminal complexity. */
VARSTAR_API vs_status vs_complexity_compute(const vs_words* words, vs_complexity** out);
VARSTAR_API void vs_complexity_destroy(vs_complexity* result);
VARSTAR_API size_t vs_complexity_var(const vs_complexity* result);
VARSTAR_API int vs_complexity_all_commute(const vs_complexity* result);
VARSTAR_API size_t vs_complexity_class_count(const vs_complexity* result);
VARSTAR_API vs_status vs_complexity_render(const vs_complexity* result, vs_format format, char** out);

/* Grammars. */
VARSTAR_API vs_status vs_grammar_synthesize(const vs_words* words, int lcm_modulus, vs_grammar** out);
VARSTAR_API vs_status vs_grammar_parse(const char* text, vs_grammar** out);
VARSTAR_API void vs_grammar_destroy(vs_grammar* grammar);
VARSTAR_API vs_status vs_grammar_serialize(const vs_grammar* grammar, char** out);
VARSTAR_API size_t vs_grammar_nonterminal_count(const vs_grammar* grammar);
VARSTAR_API int vs_grammar_has_start_cycle(const vs_grammar* grammar);
VARSTAR_API vs_status vs_grammar_member(const vs_grammar* grammar, const char* utf8, int* out);

/* Bounded equivalence against w1* + ... + wn*. */
VARSTAR_API vs_status vs_verify(const vs_grammar* grammar, const vs_words* words, size_t max_length,
                                vs_equivalence** out);
VARSTAR_API void vs_equivalence_destroy(vs_equivalence* report);
VARSTAR_API int vs_equivalence_equal(const vs_equivalence* report);
VARSTAR_API vs_status vs_equivalence_render(const vs_equivalence* report, vs_format format, char** out);

/* One-nonterminal admissibility search. */
VARSTAR_API size_t vs_default_substitution_bound(const vs_words* words);
VARSTAR_API vs_status vs_lemma_search(const vs_words* words, size_t max_body_length, size_t substitution_bound,
                                      vs_lemma** out);
VARSTAR_API void vs_lemma_destroy(vs_lemma* report);
VARSTAR_API int vs_lemma_evidence(const vs_lemma* report);
VARSTAR_API size_t vs_lemma_surviving_count(const vs_lemma* report);
VARSTAR_API vs_status vs_lemma_render(const vs_lemma* report, vs_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
