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

#include <algorithm>
#include <numeric>

#include "varstar/complexity.hpp"
#include "varstar/error.hpp"
#include "varstar/grammar.hpp"

namespace varstar {

namespace {

std::uint64_t pump_modulus(std::span<const std::size_t> exponents, bool use_lcm) {
    std::uint64_t m = 1;
    for (std::size_t k : exponents) {
        if (k == 0)
            throw Error(ErrorCode::invalid_input, "exponents must be positive");
        const std::uint64_t factor = use_lcm ? k / std::gcd(m, static_cast<std::uint64_t>(k)) : k;
        if (m > max_synth_body_length / factor)
            throw Error(ErrorCode::bound_exceeded,
                        "pump modulus exceeds the synthesis cap of " + std::to_string(max_synth_body_length));
        m *= factor;
    }
    return m;
}

void require_body_fits(std::size_t length) {
    if (length > max_synth_body_length)
        throw Error(ErrorCode::bound_exceeded,
                    "production body exceeds the synthesis cap of " + std::to_string(max_synth_body_length));
}

void push_unique(std::vector<Production>& out, Production p) {
    if (std::find(out.begin(), out.end(), p) == out.end())
        out.push_back(std::move(p));
}

std::set<char32_t> alphabet_of(std::span<const Word> words) {
    std::set<char32_t> out;
    for (const auto& w : words)
        out.insert(w.begin(), w.end());
    return out;
}

}  // namespace

ResidueSet residue_exponents(std::span<const std::size_t> exponents, SynthOptions options) {
    if (exponents.empty())
        throw Error(ErrorCode::invalid_input, "at least one exponent is required");
    ResidueSet r;
    r.modulus = pump_modulus(exponents, options.lcm_modulus);
    std::vector<bool> hit(r.modulus, false);
    for (std::size_t k : exponents)
        for (std::uint64_t t = 0; t < r.modulus; t += k)
            hit[t] = true;
    for (std::uint64_t i = 0; i < r.modulus; ++i)
        if (hit[i])
            r.residues.push_back(i);
    return r;
}

std::vector<std::string> fresh_nonterminal_names(std::size_t count, const std::set<char32_t>& terminals) {
    std::vector<std::string> names;
    auto offer = [&](std::string name) {
        if (names.size() < count && !(name.size() == 1 && terminals.contains(static_cast<char32_t>(name[0]))))
            names.push_back(std::move(name));
    };
    offer("S");
    for (char c = 'A'; c <= 'Z'; ++c)
        if (c != 'S')
            offer(std::string(1, c));
    for (std::size_t i = 1; names.size() < count; ++i)
        offer("N" + std::to_string(i));
    return names;
}

Grammar synth_commuting(std::span<const Word> words, SynthOptions options) {
    const WordList distinct = normalize_words(words);
    if (!all_commute(distinct))
        throw Error(ErrorCode::precondition, "one-nonterminal synthesis requires pairwise commuting words");

    const Word root = primitive_root(distinct.front()).root;
    std::vector<std::size_t> exponents;
    for (const auto& w : distinct)
        exponents.push_back(w.size() / root.size());
    const ResidueSet residues = residue_exponents(exponents, options);
    require_body_fits(residues.modulus * root.size() + 1);

    std::vector<Production> productions;
    Body pump;
    append_terminals(pump, repeat(root, residues.modulus));
    pump.push_back(Symbol::nonterminal(0));
    productions.push_back({0, std::move(pump)});
    for (std::uint64_t r : residues.residues) {
        Body body;
        append_terminals(body, repeat(root, r));
        productions.push_back({0, std::move(body)});
    }
    return Grammar(fresh_nonterminal_names(1, alphabet_of(distinct)), std::move(productions));
}

ClassConstruction synth_single_class(const ConjugacyClass& cls, std::size_t start, std::size_t pump,
                                     SynthOptions options) {
    if (cls.members.empty())
        throw Error(ErrorCode::invalid_input, "conjugacy class has no members");
    const Word& w = cls.representative;

    std::vector<RotationDecomposition> parts;
    std::vector<std::size_t> exponents;
    for (const auto& member : cls.members) {
        try {
            parts.push_back(rotation_decomposition(member, w));
        } catch (const Error& e) {
            throw Error(ErrorCode::precondition, std::string("class synthesis: ") + e.what());
        }
        exponents.push_back(parts.back().exponent);
    }
    const std::uint64_t modulus = pump_modulus(exponents, options.lcm_modulus);
    require_body_fits(modulus * w.size() + 1);

    ClassConstruction out;
    Body pump_body;
    append_terminals(pump_body, repeat(w, modulus));
    pump_body.push_back(Symbol::nonterminal(pump));
    out.pump_productions.push_back({pump, std::move(pump_body)});
    out.pump_productions.push_back({pump, {}});

    for (const auto& part : parts) {
        for (std::uint64_t j = 1; j <= modulus / part.exponent; ++j) {
            const std::uint64_t power = part.exponent * j - 1;
            require_body_fits(part.prefix.size() + power * w.size() + 1 + part.suffix.size());
            Body body;
            append_terminals(body, part.prefix);
            append_terminals(body, repeat(w, power));
            body.push_back(Symbol::nonterminal(pump));
            append_terminals(body, part.suffix);
            push_unique(out.start_productions, {start, std::move(body)});
        }
    }
    return out;
}

Grammar synth_minimal(std::span<const Word> words, SynthOptions options) {
    const ComplexityResult complexity = nonterminal_complexity(words);
    const WordList distinct = normalize_words(words);
    if (complexity.all_commute)
        return synth_commuting(distinct, options);

    std::vector<Production> productions;
    productions.push_back({0, {}});
    for (std::size_t c = 0; c < complexity.classes.size(); ++c) {
        auto built = synth_single_class(complexity.classes[c], 0, c + 1, options);
        for (auto& p : built.start_productions)
            push_unique(productions, std::move(p));
        for (auto& p : built.pump_productions)
            productions.push_back(std::move(p));
    }
    return Grammar(fresh_nonterminal_names(complexity.var, alphabet_of(distinct)), std::move(productions));
}

}  // namespace varstar
