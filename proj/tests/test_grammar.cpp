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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "varstar/complexity.hpp"
#include "varstar/error.hpp"
#include "varstar/grammar.hpp"
#include "varstar/verification.hpp"

using namespace varstar;

namespace {

constexpr const char* hand_grammar_text = "S -> b A a | A\nA -> a b A | <eps>";

std::set<std::uint64_t> as_set(const ResidueSet& r) {
    return {r.residues.begin(), r.residues.end()};
}

}  // namespace

TEST_CASE("residue_exponents examples") {
    const std::vector<std::size_t> two_three{2, 3};
    auto r = residue_exponents(two_three);
    CHECK(r.modulus == 6);
    CHECK(as_set(r) == oracle::residues({2, 3}, 6));
    CHECK(r.residues == std::vector<std::uint64_t>{0, 2, 3, 4});

    const std::vector<std::size_t> one{1};
    r = residue_exponents(one);
    CHECK(r.modulus == 1);
    CHECK(r.residues == std::vector<std::uint64_t>{0});

    const std::vector<std::size_t> two_two{2, 2};
    r = residue_exponents(two_two);
    CHECK(r.modulus == 4);
    CHECK(as_set(r) == oracle::residues({2, 2}, 4));
    CHECK(r.residues == std::vector<std::uint64_t>{0, 2});

    CHECK_THROWS_AS(residue_exponents(std::vector<std::size_t>{}), Error);
}

TEST_CASE("residue_exponents matches brute force; lcm shrinks the modulus") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> k(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::size_t> ks(1 + iter % 4);
        for (auto& v : ks)
            v = k(rng);
        const auto r = residue_exponents(ks);
        REQUIRE(as_set(r) == oracle::residues(ks, r.modulus));
        const auto l = residue_exponents(ks, SynthOptions{true});
        REQUIRE(r.modulus % l.modulus == 0);
        REQUIRE(as_set(l) == oracle::residues(ks, l.modulus));
    }
    CHECK(residue_exponents(std::vector<std::size_t>{4, 6}, SynthOptions{true}).modulus == 12);
}

TEST_CASE("synth_commuting examples") {
    Grammar g = synth_commuting(WordList{U"aa", U"aaa"});
    CHECK(serialize(g) == "S -> a a a a a a S | <eps> | a a | a a a | a a a a");
    CHECK_FALSE(oracle::star_union_member(U"aaaaa", {U"aa", U"aaa"}));
    CHECK_FALSE(cfg_member(g, U"aaaaa"));
    CHECK(cfg_member(g, U"aaaaaaaa"));
    CHECK_FALSE(cfg_member(g, U"aaaaaaa"));

    g = synth_commuting(WordList{U"ab"});
    CHECK(serialize(g) == "S -> a b S | <eps>");

    g = synth_commuting(WordList{U"abab"});
    CHECK(serialize(g) == "S -> a b a b S | <eps>");

    CHECK_THROWS_AS(synth_commuting(WordList{U"ab", U"ba"}), Error);
    try {
        synth_commuting(WordList{U"ab", U"ba"});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition);
    }
}

TEST_CASE("synth_single_class examples") {
    const auto classes = partition_classes(WordList{U"ab", U"baba"});
    REQUIRE(classes.size() == 1);
    const auto built = synth_single_class(classes[0], 0, 1);
    std::vector<Production> all{{0, {}}};
    all.insert(all.end(), built.start_productions.begin(), built.start_productions.end());
    all.insert(all.end(), built.pump_productions.begin(), built.pump_productions.end());
    const Grammar g({"S", "A"}, all);
    CHECK(serialize(g) == "S -> <eps> | A a b | a b A a b | b a b A a\nA -> a b a b A | <eps>");
    CHECK(bounded_equivalence(g, WordList{U"ab", U"baba"}, 20).equal);

    CHECK(serialize(synth_minimal(WordList{U"ab", U"ba"})) == "S -> <eps> | A a b | b A a\nA -> a b A | <eps>");

    const ConjugacyClass bad{{U"ab", U"abb"}, U"ab"};
    try {
        synth_single_class(bad, 0, 1);
        FAIL("expected precondition error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition);
    }
}

TEST_CASE("synth_single_class for a lone word") {
    const auto classes = partition_classes(WordList{U"ab"});
    const auto built = synth_single_class(classes[0], 0, 1);
    REQUIRE(built.start_productions.size() == 1);
    Body expected{Symbol::nonterminal(1)};
    append_terminals(expected, U"ab");
    CHECK(built.start_productions[0].body == expected);
    REQUIRE(built.pump_productions.size() == 2);
    CHECK(built.pump_productions[1].body.empty());
}

TEST_CASE("synth_minimal nonterminal counts") {
    CHECK(synth_minimal(WordList{U"ab", U"ba"}).nonterminal_count() == 2);
    const Grammar two = synth_minimal(WordList{U"ab", U"abb"});
    CHECK(two.nonterminal_count() == 3);
    CHECK(bounded_equivalence(two, WordList{U"ab", U"abb"}, 18).equal);
    CHECK(synth_minimal(WordList{U"ab", U"abab"}).nonterminal_count() == 1);
}

TEST_CASE("synthesized names avoid terminal letters") {
    const WordList ws{U"SA", U"AS"};
    const Grammar g = synth_minimal(ws);
    CHECK(g.nonterminals() == std::vector<std::string>{"B", "C"});
    CHECK(parse_grammar(serialize(g)) == g);
    CHECK(bounded_equivalence(g, ws, 12).equal);
}

TEST_CASE("lcm modulus gives an equivalent, smaller grammar") {
    const WordList ws{U"aaaa", U"aaaaaa"};
    const Grammar product = synth_minimal(ws);
    const Grammar lcm = synth_minimal(ws, SynthOptions{true});
    CHECK(product.productions().size() > lcm.productions().size());
    CHECK(bounded_equivalence(product, ws, 40).equal);
    CHECK(bounded_equivalence(lcm, ws, 40).equal);

    const WordList cls{U"ab", U"baba", U"ababab"};
    CHECK(bounded_equivalence(synth_minimal(cls, SynthOptions{true}), cls, 30).equal);
}

TEST_CASE("oversized modulus is refused") {
    WordList ws;
    for (std::size_t k : {7u, 11u, 13u, 17u, 19u, 23u})
        ws.push_back(repeat(U"a", k));
    try {
        synth_minimal(ws);
        FAIL("expected bound error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::bound_exceeded);
    }
}

TEST_CASE("build_digraph examples") {
    const Grammar hand = parse_grammar(hand_grammar_text);
    auto d = build_digraph(hand);
    CHECK(d.edges == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 1}});

    d = build_digraph(synth_commuting(WordList{U"ab"}));
    CHECK(d.edges == std::set<std::pair<std::size_t, std::size_t>>{{0, 0}});

    const Grammar toy = synth_minimal(WordList{U"ab", U"ba"});
    d = build_digraph(toy);
    CHECK(d.edges == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 1}});
    CHECK_FALSE(d.has_path(0, 0));
    CHECK_FALSE(d.has_path(1, 0));
}

TEST_CASE("has_nontrivial_start_cycle examples") {
    CHECK(has_nontrivial_start_cycle(synth_commuting(WordList{U"aa", U"aaa"})));
    CHECK_FALSE(has_nontrivial_start_cycle(synth_minimal(WordList{U"ab", U"ba"})));
    CHECK_FALSE(has_nontrivial_start_cycle(parse_grammar(hand_grammar_text)));
    // indirect cycle
    CHECK(has_nontrivial_start_cycle(parse_grammar("S -> a B | <eps>\nB -> b S")));
}

TEST_CASE("min_terminal_length examples") {
    CHECK(min_terminal_length(parse_grammar(hand_grammar_text)) == std::vector<std::size_t>{0, 0});
    CHECK(min_terminal_length(parse_grammar("S -> a b S | a b")) == std::vector<std::size_t>{2});
    CHECK(min_terminal_length(synth_minimal(WordList{U"ab", U"abb"}))[0] == 0);
    CHECK(min_terminal_length(parse_grammar("S -> A A b\nA -> a a | A c")) == std::vector<std::size_t>{5, 2});
}

TEST_CASE("grammar invariants are enforced") {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::parse;
    };
    CHECK(code_of([] { parse_grammar("S -> S | a"); }) == ErrorCode::invariant_violation);
    CHECK(code_of([] { parse_grammar("S -> A | a\nA -> A b"); }) == ErrorCode::invariant_violation);
    CHECK(code_of([] { parse_grammar("S -> a\nA -> b"); }) == ErrorCode::invariant_violation);
    CHECK(code_of([] { Grammar({}, {}); }) == ErrorCode::invariant_violation);
    CHECK(code_of([] { Grammar({"S", "S"}, {{0, {}}}); }) == ErrorCode::invariant_violation);
    CHECK(code_of([] { Grammar({"s"}, {{0, {}}}); }) == ErrorCode::invariant_violation);
    CHECK(code_of([] { Grammar({"S"}, {{0, {Symbol::nonterminal(3)}}}); }) == ErrorCode::invariant_violation);
}

TEST_CASE("serialize golden output of the hand grammar") {
    const Grammar hand({"S", "A"},
                       {{0, {Symbol::terminal(U'b'), Symbol::nonterminal(1), Symbol::terminal(U'a')}},
                        {0, {Symbol::nonterminal(1)}},
                        {1, {Symbol::terminal(U'a'), Symbol::terminal(U'b'), Symbol::nonterminal(1)}},
                        {1, {}}});
    CHECK(serialize(hand) == hand_grammar_text);
    CHECK(parse_grammar(hand_grammar_text) == hand);
}

TEST_CASE("parse accepts comments, blank lines and split heads") {
    const Grammar g = parse_grammar("# header\n\nS -> a S   # pump\nS -> <eps>\n");
    CHECK(serialize(g) == "S -> a S | <eps>");
    // an undeclared single uppercase letter is a terminal
    const Grammar upper = parse_grammar("S -> B x");
    CHECK(upper.nonterminal_count() == 1);
    CHECK(upper.terminals() == std::set<char32_t>{U'B', U'x'});
    CHECK(parse_grammar("S -> α β S | <eps>").terminals() == std::set<char32_t>{U'α', U'β'});
}

TEST_CASE("parse errors carry line and column") {
    auto where = [](const char* text) {
        try {
            parse_grammar(text);
        } catch (const ParseError& e) {
            return std::pair<std::size_t, std::size_t>{e.line(), e.column()};
        }
        FAIL("expected a parse error for: " << text);
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(where("") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(where("# only a comment\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(where("s -> a") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(where("S a b") == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(where("S") == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(where("S -> a\n  S -> foo") == std::pair<std::size_t, std::size_t>{2, 8});
    CHECK(where("S -> a | | b") == std::pair<std::size_t, std::size_t>{1, 10});
    CHECK(where("S -> a |") == std::pair<std::size_t, std::size_t>{1, 9});
    CHECK(where("S -> a <eps>") == std::pair<std::size_t, std::size_t>{1, 8});
    CHECK(where("S -> a -> b") == std::pair<std::size_t, std::size_t>{1, 8});
}

TEST_CASE("serialize refuses unrepresentable terminals") {
    CHECK_THROWS_AS(serialize(Grammar({"S"}, {{0, {Symbol::terminal(U'|')}}})), Error);
    CHECK_THROWS_AS(serialize(Grammar({"S"}, {{0, {Symbol::terminal(U' ')}}})), Error);
    CHECK_THROWS_AS(serialize(Grammar({"S", "A"}, {{0, {Symbol::nonterminal(1)}}, {1, {Symbol::terminal(U'S')}}})),
                    Error);
}

TEST_CASE("serialize/parse round trip on random synthesized grammars") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> count(1, 4);
    for (int iter = 0; iter < 100; ++iter) {
        WordList ws;
        for (int i = count(rng); i > 0; --i)
            ws.push_back(oracle::random_word(rng, U"abc", 1, 4));
        const Grammar g = synth_minimal(ws, SynthOptions{iter % 2 == 1});
        REQUIRE(parse_grammar(serialize(g)) == g);
        REQUIRE(g.nonterminal_count() == nonterminal_complexity(ws).var);
        REQUIRE(has_nontrivial_start_cycle(g) == nonterminal_complexity(ws).all_commute);
    }
}
