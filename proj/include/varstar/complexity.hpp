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

#ifndef VARSTAR_COMPLEXITY_HPP
#define VARSTAR_COMPLEXITY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "varstar/word.hpp"

namespace varstar {

struct ComplexityResult {
    std::size_t var = 0;
    std::vector<ConjugacyClass> classes;
    bool all_commute = false;
};

/// True iff every pair of the given words commutes.
bool all_commute(std::span<const Word> words);

/// Nonterminal complexity of the star-union w1* + ... + wn*.
///
/// Pairwise commuting words admit a single self-pumping nonterminal, so the
/// answer is 1. Otherwise the minimum is one start symbol plus one pump
/// nonterminal per conjugacy class of primitive roots.
ComplexityResult nonterminal_complexity(std::span<const Word> words);

}  // namespace varstar

#endif
