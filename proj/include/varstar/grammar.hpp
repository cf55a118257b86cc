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

#ifndef VARSTAR_GRAMMAR_HPP
#define VARSTAR_GRAMMAR_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varstar/word.hpp"

namespace varstar {

/// A body symbol: either a terminal code point or an index into the
/// grammar's nonterminal list.
struct Symbol {
    enum class Kind : std::uint8_t { terminal, nonterminal };

    Kind kind = Kind::terminal;
    std::uint32_t value = 0;

    static constexpr Symbol terminal(char32_t c) noexcept { return {Kind::terminal, static_cast<std::uint32_t>(c)}; }
    static constexpr Symbol nonterminal(std::size_t index) noexcept {
        return {Kind::nonterminal, static_cast<std::uint32_t>(index)};
    }

    constexpr bool is_terminal() const noexcept { return kind == Kind::terminal; }
    constexpr char32_t code_point() const noexcept { return static_cast<char32_t>(value); }
    constexpr std::size_t index() const noexcept { return value; }

    friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Body = std::vector<Symbol>;

/// Appends the terminals of `w` to `body`.
void append_terminals(Body& body, std::u32string_view w);

struct Production {
    std::size_t head = 0;
    Body body;  // empty body is epsilon

    friend bool operator==(const Production&, const Production&) = default;
};

/// Context-free grammar whose first nonterminal is the start symbol.
///
/// Construction validates names and symbol references and enforces the
/// structural invariants every grammar in this library satisfies: no unit
/// self-production A -> A, every nonterminal derives some terminal word and
/// is reachable from the start symbol. Violations throw
/// Error(invariant_violation). Productions are kept grouped by head in
/// nonterminal order; order within a head is preserved.
class Grammar {
public:
    Grammar(std::vector<std::string> nonterminals, std::vector<Production> productions);

    const std::vector<std::string>& nonterminals() const noexcept { return nonterminals_; }
    std::size_t nonterminal_count() const noexcept { return nonterminals_.size(); }
    const std::string& start() const noexcept { return nonterminals_.front(); }
    static constexpr std::size_t start_index() noexcept { return 0; }
    std::span<const Production> productions() const noexcept { return productions_; }

    std::set<char32_t> terminals() const;
    std::optional<std::size_t> find_nonterminal(std::string_view name) const;

    friend bool operator==(const Grammar&, const Grammar&) = default;

private:
    std::vector<std::string> nonterminals_;
    std::vector<Production> productions_;
};

/// Uppercase-initial identifier: [A-Z][A-Za-z0-9_]*.
bool is_nonterminal_name(std::string_view name) noexcept;

/// Shortest derivable terminal length per nonterminal (least fixpoint).
/// Throws Error(invariant_violation) if some nonterminal derives nothing.
std::vector<std::size_t> min_terminal_length(const Grammar& g);

// ---------------------------------------------------------------------------
// Dependency digraph

struct DependencyDigraph {
    std::vector<std::string> vertices;
    std::set<std::pair<std::size_t, std::size_t>> edges;

    /// True iff a path of length >= 1 leads from `from` to `to`.
    bool has_path(std::size_t from, std::size_t to) const;
};

DependencyDigraph build_digraph(const Grammar& g);
bool has_nontrivial_start_cycle(const Grammar& g);

// ---------------------------------------------------------------------------
// Synthesis

struct ResidueSet {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> residues;  // ascending, all < modulus

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

struct SynthOptions {
    /// Use lcm(k1..kn) instead of the product as the pump modulus.
    bool lcm_modulus = false;
};

/// Largest body a synthesized production may carry; larger moduli are
/// rejected with Error(bound_exceeded).
inline constexpr std::size_t max_synth_body_length = 1'000'000;

/// Exponents of the common root realised by the star-union, reduced modulo
/// the product (or lcm) of the exponents: the multiples of each k_i.
ResidueSet residue_exponents(std::span<const std::size_t> exponents, SynthOptions options = {});

/// One-nonterminal grammar for pairwise commuting words:
/// S -> w^M S | w^r for each residue r. Throws Error(precondition) otherwise.
Grammar synth_commuting(std::span<const Word> words, SynthOptions options = {});

struct ClassConstruction {
    std::vector<Production> start_productions;
    std::vector<Production> pump_productions;
};

/// Start and pump productions for one conjugacy class, with representative
/// w and M the product of the members' exponents over w:
///
///   pump  -> w^M pump | eps
///   start -> s w^(k*j - 1) pump p     for each member (s p)^k, j = 1..M/k
///
/// Each residue stays tied to the rotation frame of the member it came from.
/// Start -> eps is not included.
ClassConstruction synth_single_class(const ConjugacyClass& cls, std::size_t start, std::size_t pump,
                                     SynthOptions options = {});

/// Grammar with exactly nonterminal_complexity(words).var nonterminals.
Grammar synth_minimal(std::span<const Word> words, SynthOptions options = {});

/// Nonterminal names for a synthesized grammar over `terminals`; single
/// letters that collide with a terminal are skipped.
std::vector<std::string> fresh_nonterminal_names(std::size_t count, const std::set<char32_t>& terminals);

// ---------------------------------------------------------------------------
// Text format

/// "HEAD -> body | body" per nonterminal, start first, "<eps>" for the empty
/// body, lines separated by '\n' with no trailing newline. Throws
/// Error(invalid_input) for terminals the format cannot carry (whitespace,
/// '|', '#', or a terminal spelling a nonterminal name).
std::string serialize(const Grammar& g);

/// Parses the text format. Throws ParseError for syntax errors and
/// Error(invariant_violation) for grammars breaking the structural invariants.
Grammar parse_grammar(std::string_view text);

std::string render_body(const Grammar& g, const Body& body);

}  // namespace varstar

#endif
