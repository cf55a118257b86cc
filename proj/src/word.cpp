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

#include "varstar/word.hpp"

#include <algorithm>
#include <map>

#include "varstar/error.hpp"

namespace varstar {

namespace {

void require_nonempty(std::u32string_view u) {
    if (u.empty())
        throw Error(ErrorCode::invalid_word, "words must be nonempty");
}

}  // namespace

Word from_utf8(std::string_view text) {
    Word out;
    out.reserve(text.size());
    std::size_t i = 0;
    auto fail = [&](const char* what) {
        throw Error(ErrorCode::invalid_word,
                    std::string("malformed UTF-8 at byte ") + std::to_string(i) + ": " + what);
    };
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t extra = 0;
        char32_t cp = 0;
        if (lead < 0x80) {
            cp = lead;
        } else if ((lead & 0xE0) == 0xC0) {
            extra = 1;
            cp = lead & 0x1F;
        } else if ((lead & 0xF0) == 0xE0) {
            extra = 2;
            cp = lead & 0x0F;
        } else if ((lead & 0xF8) == 0xF0) {
            extra = 3;
            cp = lead & 0x07;
        } else {
            fail("invalid lead byte");
        }
        if (i + extra >= text.size() && extra > 0)
            fail("truncated sequence");
        for (std::size_t j = 1; j <= extra; ++j) {
            const auto cont = static_cast<unsigned char>(text[i + j]);
            if ((cont & 0xC0) != 0x80)
                fail("invalid continuation byte");
            cp = (cp << 6) | (cont & 0x3F);
        }
        static constexpr char32_t min_for_length[] = {0, 0x80, 0x800, 0x10000};
        if (cp < min_for_length[extra])
            fail("overlong encoding");
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            fail("not a Unicode scalar value");
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string to_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

std::string to_utf8(std::u32string_view word) {
    std::string out;
    out.reserve(word.size());
    for (char32_t cp : word)
        out += to_utf8(cp);
    return out;
}

Word repeat(std::u32string_view base, std::size_t times) {
    Word out;
    out.reserve(base.size() * times);
    for (std::size_t i = 0; i < times; ++i)
        out.append(base);
    return out;
}

WordList normalize_words(std::span<const Word> words) {
    if (words.empty())
        throw Error(ErrorCode::invalid_input, "at least one word is required");
    WordList out(words.begin(), words.end());
    for (const auto& w : out)
        require_nonempty(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t smallest_period(std::u32string_view u) {
    require_nonempty(u);
    // border[i] = length of the longest proper border of u[0, i)
    std::vector<std::size_t> border(u.size() + 1, 0);
    for (std::size_t i = 1; i < u.size(); ++i) {
        std::size_t b = border[i];
        while (b > 0 && u[i] != u[b])
            b = border[b];
        border[i + 1] = (u[i] == u[b]) ? b + 1 : 0;
    }
    return u.size() - border[u.size()];
}

RootDecomposition primitive_root(std::u32string_view u) {
    const std::size_t period = smallest_period(u);
    if (u.size() % period != 0)
        return {Word(u), 1};
    return {Word(u.substr(0, period)), u.size() / period};
}

bool is_primitive(std::u32string_view u) {
    return primitive_root(u).exponent == 1;
}

bool commute(std::u32string_view x, std::u32string_view y) {
    require_nonempty(x);
    require_nonempty(y);
    // compare xy and yx without materialising either
    const std::size_t n = x.size() + y.size();
    auto at_xy = [&](std::size_t i) { return i < x.size() ? x[i] : y[i - x.size()]; };
    auto at_yx = [&](std::size_t i) { return i < y.size() ? y[i] : x[i - y.size()]; };
    for (std::size_t i = 0; i < n; ++i)
        if (at_xy(i) != at_yx(i))
            return false;
    return true;
}

bool are_conjugate(std::u32string_view x, std::u32string_view y) {
    const Word rx = primitive_root(x).root;
    const Word ry = primitive_root(y).root;
    if (rx.size() != ry.size())
        return false;
    return (rx + rx).find(ry) != Word::npos;
}

Word least_rotation(std::u32string_view u) {
    require_nonempty(u);
    const auto n = static_cast<std::ptrdiff_t>(u.size());
    const Word doubled = Word(u) + Word(u);
    // Booth's algorithm: failure function over the doubled word, k tracks
    // the start of the least rotation seen so far.
    std::vector<std::ptrdiff_t> fail(static_cast<std::size_t>(2 * n), -1);
    auto at = [&](std::ptrdiff_t i) { return doubled[static_cast<std::size_t>(i)]; };
    std::ptrdiff_t k = 0;
    for (std::ptrdiff_t j = 1; j < 2 * n; ++j) {
        const char32_t sj = at(j);
        std::ptrdiff_t i = fail[static_cast<std::size_t>(j - k - 1)];
        while (i != -1 && sj != at(k + i + 1)) {
            if (sj < at(k + i + 1))
                k = j - i - 1;
            i = fail[static_cast<std::size_t>(i)];
        }
        if (sj != at(k + i + 1)) {
            if (sj < at(k))
                k = j;
            fail[static_cast<std::size_t>(j - k)] = -1;
        } else {
            fail[static_cast<std::size_t>(j - k)] = i + 1;
        }
    }
    return doubled.substr(static_cast<std::size_t>(k), u.size());
}

std::vector<ConjugacyClass> partition_classes(std::span<const Word> words) {
    const WordList distinct = normalize_words(words);
    std::map<Word, WordList> by_representative;
    for (const auto& w : distinct)
        by_representative[least_rotation(primitive_root(w).root)].push_back(w);

    std::vector<ConjugacyClass> classes;
    classes.reserve(by_representative.size());
    for (auto& [rep, members] : by_representative)
        classes.push_back({std::move(members), rep});
    return classes;
}

RotationDecomposition rotation_decomposition(std::u32string_view wi, std::u32string_view w) {
    require_nonempty(wi);
    require_nonempty(w);
    if (!is_primitive(w))
        throw Error(ErrorCode::decomposition,
                    "representative '" + to_utf8(w) + "' is not primitive");
    const RootDecomposition root = primitive_root(wi);
    if (root.root.size() == w.size()) {
        const std::size_t m = w.size();
        for (std::size_t s_len = 0; s_len < m; ++s_len) {
            const std::u32string_view prefix = w.substr(m - s_len);
            const std::u32string_view suffix = w.substr(0, m - s_len);
            if (root.root.compare(0, s_len, prefix) == 0 &&
                root.root.compare(s_len, m - s_len, suffix) == 0)
                return {Word(prefix), Word(suffix), root.exponent};
        }
    }
    throw Error(ErrorCode::decomposition,
                "'" + to_utf8(wi) + "' is not conjugate to '" + to_utf8(w) + "'");
}

}  // namespace varstar
