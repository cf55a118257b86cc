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

#include "varstar/varstar.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "varstar/complexity.hpp"
#include "varstar/error.hpp"
#include "varstar/family.hpp"
#include "varstar/grammar.hpp"
#include "varstar/report.hpp"
#include "varstar/verification.hpp"

struct vs_words {
    varstar::WordList words;
};

struct vs_complexity {
    varstar::ComplexityResult result;
};

struct vs_grammar {
    varstar::Grammar grammar;
};

struct vs_equivalence {
    varstar::EquivalenceReport report;
};

struct vs_lemma {
    varstar::AdmissibleProductionReport report;
};

namespace {

struct ThreadError {
    std::string message;
    std::size_t line = 0;
    std::size_t column = 0;
};

thread_local ThreadError last_error;

vs_status status_of(varstar::ErrorCode code) {
    using varstar::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_word: return VS_ERR_INVALID_WORD;
        case ErrorCode::invalid_input: return VS_ERR_INVALID_INPUT;
        case ErrorCode::precondition: return VS_ERR_PRECONDITION;
        case ErrorCode::decomposition: return VS_ERR_DECOMPOSITION;
        case ErrorCode::parse: return VS_ERR_PARSE;
        case ErrorCode::invariant_violation: return VS_ERR_INVARIANT;
        case ErrorCode::bound_exceeded: return VS_ERR_BOUND;
    }
    return VS_ERR_INTERNAL;
}

vs_status fail(vs_status status, std::string message) {
    last_error = {std::move(message), 0, 0};
    return status;
}

template <typename F>
vs_status guarded(F&& body) noexcept {
    try {
        body();
        last_error = {};
        return VS_OK;
    } catch (const varstar::ParseError& e) {
        last_error = {e.what(), e.line(), e.column()};
        return VS_ERR_PARSE;
    } catch (const varstar::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(VS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(VS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(VS_ERR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

varstar::Format format_of(vs_format f) {
    if (f == VS_FORMAT_JSON)
        return varstar::Format::json;
    if (f == VS_FORMAT_TEXT)
        return varstar::Format::text;
    throw varstar::Error(varstar::ErrorCode::invalid_input, "unknown output format");
}

}  // namespace

extern "C" {

const char* vs_version(void) {
    return "1.0.0";
}

const char* vs_status_name(vs_status status) {
    switch (status) {
        case VS_OK: return "ok";
        case VS_ERR_NULL_ARGUMENT: return "null argument";
        case VS_ERR_INVALID_WORD: return "invalid word";
        case VS_ERR_INVALID_INPUT: return "invalid input";
        case VS_ERR_PRECONDITION: return "construction precondition";
        case VS_ERR_DECOMPOSITION: return "decomposition";
        case VS_ERR_PARSE: return "parse error";
        case VS_ERR_INVARIANT: return "invariant violation";
        case VS_ERR_BOUND: return "bound exceeded";
        case VS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* vs_last_error(void) {
    return last_error.message.c_str();
}

void vs_last_parse_location(size_t* line, size_t* column) {
    if (line != nullptr)
        *line = last_error.line;
    if (column != nullptr)
        *column = last_error.column;
}

void vs_string_free(char* s) {
    std::free(s);
}

vs_status vs_words_create(vs_words** out) {
    if (out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_words_create: out is null");
    return guarded([&] { *out = new vs_words{}; });
}

void vs_words_destroy(vs_words* words) {
    delete words;
}

vs_status vs_words_add(vs_words* words, const char* utf8) {
    if (words == nullptr || utf8 == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_words_add: null argument");
    return guarded([&] {
        varstar::Word w = varstar::from_utf8(utf8);
        if (w.empty())
            throw varstar::Error(varstar::ErrorCode::invalid_word, "words must be nonempty");
        words->words.push_back(std::move(w));
    });
}

size_t vs_words_size(const vs_words* words) {
    return words == nullptr ? 0 : words->words.size();
}

size_t vs_words_max_length(const vs_words* words) {
    std::size_t longest = 0;
    if (words != nullptr)
        for (const auto& w : words->words)
            longest = std::max(longest, w.size());
    return longest;
}

vs_status vs_words_render(const vs_words* words, char** out) {
    if (words == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_words_render: null argument");
    return guarded([&] {
        std::string text;
        for (const auto& w : words->words)
            text += varstar::to_utf8(w) + "\n";
        *out = copy_string(text);
    });
}

vs_status vs_family(const char* name, size_t n, vs_words** out) {
    if (name == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_family: null argument");
    return guarded([&] { *out = new vs_words{varstar::family(name, n)}; });
}

vs_status vs_classes_render(const vs_words* words, vs_format format, char** out) {
    if (words == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_classes_render: null argument");
    return guarded([&] {
        const auto classes = varstar::partition_classes(words->words);
        *out = copy_string(varstar::render(std::span<const varstar::ConjugacyClass>(classes), format_of(format)));
    });
}

vs_status vs_complexity_compute(const vs_words* words, vs_complexity** out) {
    if (words == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_complexity_compute: null argument");
    return guarded([&] { *out = new vs_complexity{varstar::nonterminal_complexity(words->words)}; });
}

void vs_complexity_destroy(vs_complexity* result) {
    delete result;
}

size_t vs_complexity_var(const vs_complexity* result) {
    return result == nullptr ? 0 : result->result.var;
}

int vs_complexity_all_commute(const vs_complexity* result) {
    return result != nullptr && result->result.all_commute ? 1 : 0;
}

size_t vs_complexity_class_count(const vs_complexity* result) {
    return result == nullptr ? 0 : result->result.classes.size();
}

vs_status vs_complexity_render(const vs_complexity* result, vs_format format, char** out) {
    if (result == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_complexity_render: null argument");
    return guarded([&] { *out = copy_string(varstar::render(result->result, format_of(format))); });
}

vs_status vs_grammar_synthesize(const vs_words* words, int lcm_modulus, vs_grammar** out) {
    if (words == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_grammar_synthesize: null argument");
    return guarded([&] {
        varstar::SynthOptions options;
        options.lcm_modulus = lcm_modulus != 0;
        *out = new vs_grammar{varstar::synth_minimal(words->words, options)};
    });
}

vs_status vs_grammar_parse(const char* text, vs_grammar** out) {
    if (text == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_grammar_parse: null argument");
    return guarded([&] { *out = new vs_grammar{varstar::parse_grammar(text)}; });
}

void vs_grammar_destroy(vs_grammar* grammar) {
    delete grammar;
}

vs_status vs_grammar_serialize(const vs_grammar* grammar, char** out) {
    if (grammar == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_grammar_serialize: null argument");
    return guarded([&] { *out = copy_string(varstar::serialize(grammar->grammar)); });
}

size_t vs_grammar_nonterminal_count(const vs_grammar* grammar) {
    return grammar == nullptr ? 0 : grammar->grammar.nonterminal_count();
}

int vs_grammar_has_start_cycle(const vs_grammar* grammar) {
    return grammar != nullptr && varstar::has_nontrivial_start_cycle(grammar->grammar) ? 1 : 0;
}

vs_status vs_grammar_member(const vs_grammar* grammar, const char* utf8, int* out) {
    if (grammar == nullptr || utf8 == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_grammar_member: null argument");
    return guarded([&] { *out = varstar::cfg_member(grammar->grammar, varstar::from_utf8(utf8)) ? 1 : 0; });
}

vs_status vs_verify(const vs_grammar* grammar, const vs_words* words, size_t max_length, vs_equivalence** out) {
    if (grammar == nullptr || words == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_verify: null argument");
    return guarded([&] {
        const auto distinct = varstar::normalize_words(words->words);
        *out = new vs_equivalence{varstar::bounded_equivalence(grammar->grammar, distinct, max_length)};
    });
}

void vs_equivalence_destroy(vs_equivalence* report) {
    delete report;
}

int vs_equivalence_equal(const vs_equivalence* report) {
    return report != nullptr && report->report.equal ? 1 : 0;
}

vs_status vs_equivalence_render(const vs_equivalence* report, vs_format format, char** out) {
    if (report == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_equivalence_render: null argument");
    return guarded([&] { *out = copy_string(varstar::render(report->report, format_of(format))); });
}

size_t vs_default_substitution_bound(const vs_words* words) {
    return words == nullptr ? 0 : varstar::default_substitution_bound(words->words);
}

vs_status vs_lemma_search(const vs_words* words, size_t max_body_length, size_t substitution_bound,
                          vs_lemma** out) {
    if (words == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_lemma_search: null argument");
    return guarded([&] {
        *out = new vs_lemma{
            varstar::admissible_one_nt_productions(words->words, max_body_length, substitution_bound)};
    });
}

void vs_lemma_destroy(vs_lemma* report) {
    delete report;
}

int vs_lemma_evidence(const vs_lemma* report) {
    return report != nullptr && report->report.all_terminal_or_trivial ? 1 : 0;
}

size_t vs_lemma_surviving_count(const vs_lemma* report) {
    return report == nullptr ? 0 : report->report.surviving.size();
}

vs_status vs_lemma_render(const vs_lemma* report, vs_format format, char** out) {
    if (report == nullptr || out == nullptr)
        return fail(VS_ERR_NULL_ARGUMENT, "vs_lemma_render: null argument");
    return guarded([&] { *out = copy_string(varstar::render(report->report, format_of(format))); });
}

}  // extern "C"
