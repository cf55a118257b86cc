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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Thresholds and tolerances are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "varstar/complexity.hpp"
#include "varstar/grammar.hpp"
#include "varstar/verification.hpp"

#ifndef VARSTAR_CLI_PATH
#error "VARSTAR_CLI_PATH must point at the varstar executable"
#endif

using namespace varstar;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        } else if (!condition) {
            detail += "; " + what;
        }
    }
};

std::string show(const WordList& ws) {
    std::string out = "{";
    for (std::size_t i = 0; i < ws.size(); ++i)
        out += (i ? "," : "") + to_utf8(ws[i]);
    return out + "}";
}

std::string run_shell(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr)
        out += buf;
    status = pclose(pipe);
    return out;
}

// Random sets shared by criteria 4, 5 and 7.
std::vector<WordList> commuting_sets() {
    std::mt19937 rng(4);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    std::uniform_int_distribution<std::size_t> exponent(1, 4);
    std::vector<WordList> out;
    while (out.size() < 200) {
        const Word root = oracle::random_word(rng, U"abc", 1, 3);
        WordList ws;
        for (std::size_t i = count(rng); i > 0; --i)
            ws.push_back(repeat(root, exponent(rng)));
        out.push_back(std::move(ws));
    }
    return out;
}

std::vector<WordList> general_sets() {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    std::uniform_int_distribution<std::size_t> alphabet_size(1, 3);
    std::vector<WordList> out{{U"ab", U"baba"}};
    while (out.size() < 200) {
        const Word alphabet = Word(U"abc").substr(0, alphabet_size(rng));
        WordList ws;
        for (std::size_t i = count(rng); i > 0; --i)
            ws.push_back(oracle::random_word(rng, alphabet, 1, 4));
        out.push_back(std::move(ws));
    }
    return out;
}

Outcome toy_example() {
    Outcome o;
    const WordList toy{U"ab", U"ba"};
    o.require(nonterminal_complexity(toy).var == 2, "var != 2");
    const Grammar g = synth_minimal(toy);
    o.require(g.nonterminal_count() == 2, "synthesized grammar does not have 2 nonterminals");
    const auto report = bounded_equivalence(g, toy, 30);
    o.require(report.equal, "bounded equivalence up to 30 failed");
    return o;
}

Outcome hand_grammar() {
    Outcome o;
    const Grammar g = parse_grammar("S -> b A a | A\nA -> a b A | <eps>");
    o.require(cfg_enumerate(g, 30) == oracle_enumerate(WordList{U"ab", U"ba"}, 30),
              "enumeration differs from the oracle up to 30");
    return o;
}

Outcome gruska_cli() {
    Outcome o;
    const std::string cli = VARSTAR_CLI_PATH;
    for (int n = 1; n <= 5; ++n) {
        int status = 0;
        const std::string out = run_shell("'" + cli + "' family gruska " + std::to_string(n) + " | '" + cli +
                                              "' var --stdin",
                                          status);
        const std::string want = "Var = " + std::to_string(n + 1);
        const std::string first_line = out.substr(0, out.find('\n'));
        o.require(status == 0 && first_line == want,
                  "n=" + std::to_string(n) + ": expected '" + want + "', CLI printed '" + first_line + "'");
    }
    return o;
}

Outcome one_variable_theorem(const std::vector<WordList>& sets) {
    Outcome o;
    for (const auto& ws : sets) {
        const auto result = nonterminal_complexity(ws);
        if (result.var != 1) {
            o.require(false, show(ws) + ": var " + std::to_string(result.var));
            continue;
        }
        const Grammar g = synth_minimal(ws);
        o.require(g.nonterminal_count() == 1, show(ws) + ": grammar has more than one nonterminal");
        const Word root = primitive_root(ws.front()).root;
        std::size_t modulus = 1;
        for (const auto& w : normalize_words(ws))
            modulus *= w.size() / root.size();
        const std::size_t bound = std::min<std::size_t>(3 * modulus * root.size(), 36);
        o.require(bounded_equivalence(g, ws, bound).equal, show(ws) + ": not equivalent up to " + std::to_string(bound));
    }
    return o;
}

Outcome second_theorem(const std::vector<WordList>& sets) {
    Outcome o;
    for (const auto& ws : sets) {
        const WordList distinct = normalize_words(ws);
        const auto result = nonterminal_complexity(ws);
        const std::size_t expected =
            oracle::pairwise_commute(distinct) ? 1 : oracle::class_count(distinct) + 1;
        o.require(result.var == expected, show(ws) + ": var " + std::to_string(result.var) + ", expected " +
                                              std::to_string(expected));
        const Grammar g = synth_minimal(ws);
        o.require(g.nonterminal_count() == result.var, show(ws) + ": nonterminal count differs from var");
        const auto report = bounded_equivalence(g, ws, 24);
        o.require(report.equal, show(ws) + ": not equivalent up to 24");
    }
    return o;
}

Outcome lemma_mechanization() {
    Outcome o;
    const WordList toy{U"ab", U"ba"};
    const auto report = admissible_one_nt_productions(toy, 4, 4);
    std::set<Body> expected{Body{Symbol::nonterminal(0)}};
    for (const auto& w : oracle_enumerate(toy, 4)) {
        Body b;
        append_terminals(b, w);
        expected.insert(b);
    }
    const std::set<Body> got(report.surviving.begin(), report.surviving.end());
    o.require(got == expected && got.size() == report.surviving.size(), "surviving bodies differ from {S} + L<=4");
    o.require(one_nt_impossibility_evidence(toy, 4, 4), "impossibility evidence is false");
    return o;
}

Outcome start_cycle_consistency(const std::vector<WordList>& commuting, const std::vector<WordList>& general) {
    Outcome o;
    for (const auto* sets : {&commuting, &general}) {
        for (const auto& ws : *sets) {
            const auto result = nonterminal_complexity(ws);
            const Grammar g = synth_minimal(ws);
            const auto digraph = build_digraph(g);
            if (result.all_commute) {
                o.require(digraph.edges.contains({0, 0}), show(ws) + ": commuting grammar lacks a start self-loop");
            } else {
                bool returns = false;
                for (std::size_t v = 0; v < g.nonterminal_count(); ++v)
                    returns = returns || digraph.edges.contains({v, 0});
                o.require(!returns && !has_nontrivial_start_cycle(g),
                          show(ws) + ": non-commuting grammar returns to the start symbol");
            }
        }
    }
    return o;
}

Outcome oracle_consistency() {
    Outcome o;
    std::mt19937 rng(8);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    const auto words = oracle::all_words(U"ab", 8);
    for (int i = 0; i < 20; ++i) {
        WordList ws;
        for (std::size_t k = count(rng); k > 0; --k)
            ws.push_back(oracle::random_word(rng, U"ab", 1, 4));
        const Grammar g = synth_minimal(ws);
        for (const auto& u : words)
            o.require(cfg_member(g, u) == oracle_member(u, ws),
                      show(ws) + ": disagreement on '" + to_utf8(u) + "'");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const auto commuting = commuting_sets();
    const auto general = general_sets();

    const std::vector<Criterion> criteria{
        {"AC1 toy example: Var{ab,ba}=2, 2 nonterminals, equal up to 30", 1.0, toy_example},
        {"AC2 hand grammar S -> bAa | A, A -> abA | eps matches oracle up to 30", 1.0, hand_grammar},
        {"AC3 gruska family n=1..5 via CLI prints Var = n+1", 1.0, gruska_cli},
        {"AC4 one-variable theorem on 200 commuting sets", 60.0, [&] { return one_variable_theorem(commuting); }},
        {"AC5 class-count theorem on 200 random sets, equal up to 24", 120.0, [&] { return second_theorem(general); }},
        {"AC6 one-nonterminal admissible bodies for {ab,ba} at (4,4)", 10.0, lemma_mechanization},
        {"AC7 start-cycle structure over the 400 sets of AC4-AC5", 60.0,
         [&] { return start_cycle_consistency(commuting, general); }},
        {"AC8 cfg_member = oracle_member for |u|<=8 on 20 random sets", 60.0, oracle_consistency},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto begin = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - begin).count();
        if (seconds >= c.limit_seconds)
            outcome.require(false, "runtime " + std::to_string(seconds) + " s exceeds " +
                                       std::to_string(c.limit_seconds) + " s");
        std::ostringstream line;
        line << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << seconds << " s)";
        if (!outcome.ok)
            line << " -- " << outcome.detail;
        std::cout << line.str() << std::endl;
        failures += outcome.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
