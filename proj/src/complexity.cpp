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

#include "varstar/complexity.hpp"

namespace varstar {

bool all_commute(std::span<const Word> words) {
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (!commute(words[i], words[j]))
                return false;
    return true;
}

ComplexityResult nonterminal_complexity(std::span<const Word> words) {
    const WordList distinct = normalize_words(words);
    ComplexityResult result;
    result.classes = partition_classes(distinct);
    // Commuting with the first word is enough: commuting is transitive on
    // nonempty words since it means sharing a primitive root.
    result.all_commute = true;
    for (std::size_t i = 1; i < distinct.size(); ++i) {
        if (!commute(distinct.front(), distinct[i])) {
            result.all_commute = false;
            break;
        }
    }
    result.var = result.all_commute ? 1 : result.classes.size() + 1;
    return result;
}

}  // namespace varstar
