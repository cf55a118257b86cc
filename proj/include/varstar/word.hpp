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

#ifndef VARSTAR_WORD_HPP
#define VARSTAR_WORD_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace varstar {

/// A word is a finite sequence of Unicode scalar values. Ordering is the
/// code-point lexicographic order of std::u32string.
using Word = std::u32string;
using WordList = std::vector<Word>;

/// Decodes UTF-8. Throws Error(invalid_word) on malformed input.
Word from_utf8(std::string_view text);
std::string to_utf8(std::u32string_view word);
std::string to_utf8(char32_t symbol);

/// `base` concatenated with itself `times` times.
Word repeat(std::u32string_view base, std::size_t times);

/// Sorts and removes duplicates. Throws on an empty list or an empty word.
WordList normalize_words(std::span<const Word> words);

/// Length-then-lexicographic order used by every enumeration report.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const noexcept {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

struct RootDecomposition {
    Word root;
    std::size_t exponent = 0;

    friend bool operator==(const RootDecomposition&, const RootDecomposition&) = default;
};

/// A word of a conjugacy class written as (prefix + suffix)^exponent, where
/// suffix + prefix is the class representative.
struct RotationDecomposition {
    Word prefix;
    Word suffix;
    std::size_t exponent = 0;

    friend bool operator==(const RotationDecomposition&, const RotationDecomposition&) = default;
};

struct ConjugacyClass {
    WordList members;    // sorted, distinct
    Word representative; // least rotation of the members' shared root

    friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

/// Smallest period of `u` via the border (failure) function.
std::size_t smallest_period(std::u32string_view u);

RootDecomposition primitive_root(std::u32string_view u);
bool is_primitive(std::u32string_view u);

/// xy == yx.
bool commute(std::u32string_view x, std::u32string_view y);

/// True iff the primitive roots of x and y are rotations of one another.
bool are_conjugate(std::u32string_view x, std::u32string_view y);

/// Lexicographically least rotation of `u` (Booth's algorithm).
Word least_rotation(std::u32string_view u);

/// Partition under conjugacy of primitive roots, ordered by representative.
std::vector<ConjugacyClass> partition_classes(std::span<const Word> words);

/// Decomposes `wi` against the representative `w`, choosing the shortest
/// prefix among valid decompositions.
/// Throws Error(decomposition) if wi's root is not a rotation of w, or if w
/// is not primitive.
RotationDecomposition rotation_decomposition(std::u32string_view wi, std::u32string_view w);

}  // namespace varstar

#endif
