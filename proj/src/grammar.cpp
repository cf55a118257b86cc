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

#include "varstar/grammar.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "varstar/error.hpp"

namespace varstar {

namespace {

constexpr std::size_t unreachable_length = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> shortest_lengths(std::size_t count, std::span<const Production> productions) {
    std::vector<std::size_t> best(count, unreachable_length);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : productions) {
            std::size_t total = 0;
            bool finite = true;
            for (const auto& sym : p.body) {
                if (sym.is_terminal()) {
                    ++total;
                } else if (best[sym.index()] == unreachable_length) {
                    finite = false;
                    break;
                } else {
                    total += best[sym.index()];
                }
            }
            if (finite && total < best[p.head]) {
                best[p.head] = total;
                changed = true;
            }
        }
    }
    return best;
}

[[noreturn]] void violation(const std::string& what) {
    throw Error(ErrorCode::invariant_violation, what);
}

}  // namespace

void append_terminals(Body& body, std::u32string_view w) {
    for (char32_t c : w)
        body.push_back(Symbol::terminal(c));
}

bool is_nonterminal_name(std::string_view name) noexcept {
    if (name.empty() || name.front() < 'A' || name.front() > 'Z')
        return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Grammar::Grammar(std::vector<std::string> nonterminals, std::vector<Production> productions)
    : nonterminals_(std::move(nonterminals)), productions_(std::move(productions)) {
    if (nonterminals_.empty())
        violation("grammar has no start symbol");
    std::unordered_set<std::string> seen;
    for (const auto& name : nonterminals_) {
        if (!is_nonterminal_name(name))
            violation("'" + name + "' is not a valid nonterminal name");
        if (!seen.insert(name).second)
            violation("nonterminal '" + name + "' declared twice");
    }
    const std::size_t n = nonterminals_.size();
    for (const auto& p : productions_) {
        if (p.head >= n)
            violation("production head out of range");
        for (const auto& sym : p.body)
            if (!sym.is_terminal() && sym.index() >= n)
                violation("production body refers to an undeclared nonterminal");
        if (p.body.size() == 1 && p.body.front() == Symbol::nonterminal(p.head))
            violation("unit self-production " + nonterminals_[p.head] + " -> " + nonterminals_[p.head]);
    }

    std::stable_sort(productions_.begin(), productions_.end(),
                     [](const Production& a, const Production& b) { return a.head < b.head; });

    const auto lengths = shortest_lengths(n, productions_);
    for (std::size_t i = 0; i < n; ++i)
        if (lengths[i] == unreachable_length)
            violation("nonterminal '" + nonterminals_[i] + "' derives no terminal word");

    std::vector<bool> reached(n, false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        const std::size_t a = stack.back();
        stack.pop_back();
        for (const auto& p : productions_) {
            if (p.head != a)
                continue;
            for (const auto& sym : p.body) {
                if (!sym.is_terminal() && !reached[sym.index()]) {
                    reached[sym.index()] = true;
                    stack.push_back(sym.index());
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!reached[i])
            violation("nonterminal '" + nonterminals_[i] + "' is unreachable from the start symbol");
}

std::set<char32_t> Grammar::terminals() const {
    std::set<char32_t> out;
    for (const auto& p : productions_)
        for (const auto& sym : p.body)
            if (sym.is_terminal())
                out.insert(sym.code_point());
    return out;
}

std::optional<std::size_t> Grammar::find_nonterminal(std::string_view name) const {
    for (std::size_t i = 0; i < nonterminals_.size(); ++i)
        if (nonterminals_[i] == name)
            return i;
    return std::nullopt;
}

std::vector<std::size_t> min_terminal_length(const Grammar& g) {
    auto lengths = shortest_lengths(g.nonterminal_count(), g.productions());
    for (std::size_t i = 0; i < lengths.size(); ++i)
        if (lengths[i] == unreachable_length)
            violation("nonterminal '" + g.nonterminals()[i] + "' derives no terminal word");
    return lengths;
}

bool DependencyDigraph::has_path(std::size_t from, std::size_t to) const {
    std::vector<bool> seen(vertices.size(), false);
    std::vector<std::size_t> stack;
    auto push_successors = [&](std::size_t v) {
        for (auto it = edges.lower_bound({v, 0}); it != edges.end() && it->first == v; ++it) {
            if (!seen[it->second]) {
                seen[it->second] = true;
                stack.push_back(it->second);
            }
        }
    };
    push_successors(from);
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (v == to)
            return true;
        push_successors(v);
    }
    return false;
}

DependencyDigraph build_digraph(const Grammar& g) {
    DependencyDigraph d;
    d.vertices = g.nonterminals();
    for (const auto& p : g.productions())
        for (const auto& sym : p.body)
            if (!sym.is_terminal())
                d.edges.emplace(p.head, sym.index());
    return d;
}

bool has_nontrivial_start_cycle(const Grammar& g) {
    return build_digraph(g).has_path(Grammar::start_index(), Grammar::start_index());
}

}  // namespace varstar
