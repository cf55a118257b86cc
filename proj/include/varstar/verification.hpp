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

#ifndef VARSTAR_VERIFICATION_HPP
#define VARSTAR_VERIFICATION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "varstar/grammar.hpp"
#include "varstar/word.hpp"

namespace varstar {

/// Default resource cap for enumerations and searches.
inline constexpr std::size_t default_resource_cap = 1'000'000;

// ---------------------------------------------------------------------------
// Regular oracle for w1* + ... + wn*

bool oracle_member(std::u32string_view u, std::span<const Word> words);

/// All words of the star-union up to `max_length`, shortlex sorted.
WordList oracle_enumerate(std::span<const Word> words, std::size_t max_length);

// ---------------------------------------------------------------------------
// Context-free side

/// Earley recognition; handles epsilon bodies directly.
bool cfg_member(const Grammar& g, std::u32string_view u);

/// Every terminal word of length <= max_length derivable from the start
/// symbol, shortlex sorted. Leftmost breadth-first expansion of sentential
/// forms, pruned by terminal count plus the shortest completion of the
/// remaining nonterminals. Throws Error(bound_exceeded) when more than
/// `form_cap` distinct sentential forms would be visited.
WordList cfg_enumerate(const Grammar& g, std::size_t max_length, std::size_t form_cap = default_resource_cap);

struct EquivalenceReport {
    std::size_t max_length = 0;
    bool equal = false;
    WordList missing;  // in the star-union, not derived
    WordList extra;    // derived, not in the star-union
};

EquivalenceReport bounded_equivalence(const Grammar& g, std::span<const Word> words, std::size_t max_length,
                                      std::size_t form_cap = default_resource_cap);

// ---------------------------------------------------------------------------
// One-nonterminal admissibility search

/// Candidate body of a one-nonterminal production; nonterminal symbols all
/// refer to the single start symbol (index 0).
using OneNtBody = Body;

struct AdmissibleProductionReport {
    std::vector<OneNtBody> surviving;
    std::size_t max_body_length = 0;
    std::size_t substitution_bound = 0;
    bool all_terminal_or_trivial = false;
    std::string start_name = "S";  // spelling used when rendering bodies
};

/// 2 * max|w_i| + 2.
std::size_t default_substitution_bound(std::span<const Word> words);

/// Enumerates all bodies over the words' alphabet plus the start symbol up to
/// `max_body_length` and keeps those for which every substitution of every
/// start occurrence by an oracle word of length <= `substitution_bound` stays
/// in the language. A one-nonterminal grammar for the star-union can only use
/// surviving bodies. Throws Error(bound_exceeded) if more than
/// `candidate_cap` bodies would be examined.
AdmissibleProductionReport admissible_one_nt_productions(std::span<const Word> words, std::size_t max_body_length,
                                                         std::size_t substitution_bound,
                                                         std::size_t candidate_cap = default_resource_cap);

/// True iff every surviving body is the lone start symbol or a terminal word,
/// i.e. within the searched bounds no one-nonterminal grammar can generate
/// the (infinite) star-union. Bounded evidence, not a proof.
bool one_nt_impossibility_evidence(std::span<const Word> words, std::size_t max_body_length,
                                   std::size_t substitution_bound,
                                   std::size_t candidate_cap = default_resource_cap);

std::string render_one_nt_body(const AdmissibleProductionReport& report, const OneNtBody& body);

}  // namespace varstar

#endif
