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

#include "varstar/verification.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "varstar/error.hpp"

namespace varstar {

namespace {

bool is_power_of(std::u32string_view u, std::u32string_view w) {
    if (u.size() % w.size() != 0)
        return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != w[i % w.size()])
            return false;
    return true;
}

bool is_prefix_of_power(std::u32string_view u, std::u32string_view w) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != w[i % w.size()])
            return false;
    return true;
}

WordList sorted_shortlex(std::set<Word, ShortLex> words) {
    return WordList(words.begin(), words.end());
}

std::vector<bool> nullable_nonterminals(const Grammar& g) {
    std::vector<bool> nullable(g.nonterminal_count(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (nullable[p.head])
                continue;
            const bool all = std::all_of(p.body.begin(), p.body.end(), [&](const Symbol& s) {
                return !s.is_terminal() && nullable[s.index()];
            });
            if (all) {
                nullable[p.head] = true;
                changed = true;
            }
        }
    }
    return nullable;
}

struct EarleyItem {
    std::size_t production;
    std::size_t dot;
    std::size_t origin;

    friend auto operator<=>(const EarleyItem&, const EarleyItem&) = default;
};

class EarleyChart {
public:
    explicit EarleyChart(std::size_t positions) : items_(positions), seen_(positions) {}

    void add(std::size_t position, const EarleyItem& item) {
        if (seen_[position].insert(item).second)
            items_[position].push_back(item);
    }

    const std::vector<EarleyItem>& at(std::size_t position) const { return items_[position]; }

private:
    std::vector<std::vector<EarleyItem>> items_;
    std::vector<std::set<EarleyItem>> seen_;
};

}  // namespace

bool oracle_member(std::u32string_view u, std::span<const Word> words) {
    if (u.empty())
        return true;
    return std::any_of(words.begin(), words.end(),
                       [&](const Word& w) { return !w.empty() && is_power_of(u, w); });
}

WordList oracle_enumerate(std::span<const Word> words, std::size_t max_length) {
    std::set<Word, ShortLex> out{Word{}};
    for (const auto& w : words) {
        if (w.empty())
            continue;
        Word power = w;
        while (power.size() <= max_length) {
            out.insert(power);
            power += w;
        }
    }
    return sorted_shortlex(std::move(out));
}

bool cfg_member(const Grammar& g, std::u32string_view u) {
    const auto productions = g.productions();
    const std::vector<bool> nullable = nullable_nonterminals(g);
    std::vector<std::vector<std::size_t>> by_head(g.nonterminal_count());
    for (std::size_t i = 0; i < productions.size(); ++i)
        by_head[productions[i].head].push_back(i);

    const std::size_t n = u.size();
    EarleyChart chart(n + 1);
    for (std::size_t p : by_head[Grammar::start_index()])
        chart.add(0, {p, 0, 0});

    for (std::size_t pos = 0; pos <= n; ++pos) {
        // the item list at `pos` grows while we walk it
        for (std::size_t idx = 0; idx < chart.at(pos).size(); ++idx) {
            const EarleyItem item = chart.at(pos)[idx];
            const Body& body = productions[item.production].body;
            if (item.dot < body.size()) {
                const Symbol next = body[item.dot];
                if (next.is_terminal()) {
                    if (pos < n && u[pos] == next.code_point())
                        chart.add(pos + 1, {item.production, item.dot + 1, item.origin});
                    continue;
                }
                for (std::size_t p : by_head[next.index()])
                    chart.add(pos, {p, 0, pos});
                if (nullable[next.index()])
                    chart.add(pos, {item.production, item.dot + 1, item.origin});
            } else {
                const std::size_t head = productions[item.production].head;
                const auto& parents = chart.at(item.origin);
                for (std::size_t k = 0; k < parents.size(); ++k) {
                    const EarleyItem parent = parents[k];
                    const Body& pbody = productions[parent.production].body;
                    if (parent.dot < pbody.size() && pbody[parent.dot] == Symbol::nonterminal(head))
                        chart.add(pos, {parent.production, parent.dot + 1, parent.origin});
                }
            }
        }
    }

    return std::any_of(chart.at(n).begin(), chart.at(n).end(), [&](const EarleyItem& item) {
        return item.origin == 0 && productions[item.production].head == Grammar::start_index() &&
               item.dot == productions[item.production].body.size();
    });
}

WordList cfg_enumerate(const Grammar& g, std::size_t max_length, std::size_t form_cap) {
    const std::vector<std::size_t> shortest = min_terminal_length(g);
    auto weight_of = [&](const Body& body) {
        std::size_t w = 0;
        for (const auto& s : body)
            w += s.is_terminal() ? 1 : shortest[s.index()];
        return w;
    };
    std::vector<std::size_t> body_weight;
    for (const auto& p : g.productions())
        body_weight.push_back(weight_of(p.body));

    struct Form {
        Body symbols;
        std::size_t weight;
    };
    std::set<Word, ShortLex> words;
    std::set<Body> visited;
    std::deque<Form> queue;

    Body initial{Symbol::nonterminal(Grammar::start_index())};
    if (shortest[Grammar::start_index()] > max_length)
        return {};
    visited.insert(initial);
    queue.push_back({std::move(initial), shortest[Grammar::start_index()]});

    while (!queue.empty()) {
        Form form = std::move(queue.front());
        queue.pop_front();

        const auto leftmost = std::find_if(form.symbols.begin(), form.symbols.end(),
                                           [](const Symbol& s) { return !s.is_terminal(); });
        if (leftmost == form.symbols.end()) {
            Word w;
            w.reserve(form.symbols.size());
            for (const auto& s : form.symbols)
                w.push_back(s.code_point());
            words.insert(std::move(w));
            continue;
        }

        const std::size_t head = leftmost->index();
        const std::size_t at = static_cast<std::size_t>(leftmost - form.symbols.begin());
        const std::size_t base = form.weight - shortest[head];
        const auto productions = g.productions();
        for (std::size_t i = 0; i < productions.size(); ++i) {
            if (productions[i].head != head || base + body_weight[i] > max_length)
                continue;
            Body next;
            next.reserve(form.symbols.size() + productions[i].body.size());
            next.insert(next.end(), form.symbols.begin(), form.symbols.begin() + static_cast<std::ptrdiff_t>(at));
            next.insert(next.end(), productions[i].body.begin(), productions[i].body.end());
            next.insert(next.end(), form.symbols.begin() + static_cast<std::ptrdiff_t>(at) + 1, form.symbols.end());
            if (!visited.insert(next).second)
                continue;
            if (visited.size() > form_cap)
                throw Error(ErrorCode::bound_exceeded, "bounded enumeration exceeded the sentential-form cap of " +
                                                           std::to_string(form_cap));
            queue.push_back({std::move(next), base + body_weight[i]});
        }
    }
    return sorted_shortlex(std::move(words));
}

EquivalenceReport bounded_equivalence(const Grammar& g, std::span<const Word> words, std::size_t max_length,
                                      std::size_t form_cap) {
    const WordList derived = cfg_enumerate(g, max_length, form_cap);
    const WordList expected = oracle_enumerate(words, max_length);
    EquivalenceReport report;
    report.max_length = max_length;
    std::set_difference(expected.begin(), expected.end(), derived.begin(), derived.end(),
                        std::back_inserter(report.missing), ShortLex{});
    std::set_difference(derived.begin(), derived.end(), expected.begin(), expected.end(),
                        std::back_inserter(report.extra), ShortLex{});
    report.equal = report.missing.empty() && report.extra.empty();
    return report;
}

std::size_t default_substitution_bound(std::span<const Word> words) {
    std::size_t longest = 0;
    for (const auto& w : words)
        longest = std::max(longest, w.size());
    return 2 * longest + 2;
}

AdmissibleProductionReport admissible_one_nt_productions(std::span<const Word> words, std::size_t max_body_length,
                                                         std::size_t substitution_bound, std::size_t candidate_cap) {
    const WordList distinct = normalize_words(words);
    if (max_body_length < 1 || substitution_bound < 1)
        throw Error(ErrorCode::invalid_input, "search bounds must be at least 1");

    std::set<char32_t> alphabet;
    for (const auto& w : distinct)
        alphabet.insert(w.begin(), w.end());
    std::vector<Symbol> letters;
    for (char32_t c : alphabet)
        letters.push_back(Symbol::terminal(c));
    letters.push_back(Symbol::nonterminal(0));

    // total candidates: sum of |letters|^l for l = 0..max_body_length
    std::size_t total = 0;
    std::size_t layer = 1;
    for (std::size_t l = 0; l <= max_body_length; ++l) {
        total += layer;
        if (total > candidate_cap)
            throw Error(ErrorCode::bound_exceeded, "admissible-production search exceeds the candidate cap of " +
                                                       std::to_string(candidate_cap) + " bodies");
        layer *= letters.size();
    }

    const WordList fillers = oracle_enumerate(distinct, substitution_bound);
    auto prefix_ok = [&](const Word& partial) {
        return std::any_of(distinct.begin(), distinct.end(),
                           [&](const Word& w) { return is_prefix_of_power(partial, w); });
    };

    // every way of filling start occurrences must land inside the language
    std::function<bool(const Body&, std::size_t, Word&)> all_fillings_accepted =
        [&](const Body& body, std::size_t at, Word& built) -> bool {
        if (!prefix_ok(built))
            return false;
        if (at == body.size())
            return oracle_member(built, distinct);
        const std::size_t mark = built.size();
        if (body[at].is_terminal()) {
            built.push_back(body[at].code_point());
            const bool ok = all_fillings_accepted(body, at + 1, built);
            built.resize(mark);
            return ok;
        }
        for (const auto& filler : fillers) {
            built += filler;
            const bool ok = all_fillings_accepted(body, at + 1, built);
            built.resize(mark);
            if (!ok)
                return false;
        }
        return true;
    };

    AdmissibleProductionReport report;
    report.max_body_length = max_body_length;
    report.substitution_bound = substitution_bound;
    report.start_name = fresh_nonterminal_names(1, alphabet).front();

    const Body lone_start{Symbol::nonterminal(0)};
    report.all_terminal_or_trivial = true;
    for (std::size_t length = 0; length <= max_body_length; ++length) {
        std::vector<std::size_t> digits(length, 0);
        while (true) {
            Body body;
            body.reserve(length);
            for (std::size_t d : digits)
                body.push_back(letters[d]);
            Word built;
            if (all_fillings_accepted(body, 0, built)) {
                const bool has_start = std::any_of(body.begin(), body.end(),
                                                   [](const Symbol& s) { return !s.is_terminal(); });
                if (has_start && body != lone_start)
                    report.all_terminal_or_trivial = false;
                report.surviving.push_back(std::move(body));
            }
            std::size_t pos = length;
            while (pos > 0 && ++digits[pos - 1] == letters.size()) {
                digits[pos - 1] = 0;
                --pos;
            }
            if (pos == 0)
                break;
        }
    }
    return report;
}

bool one_nt_impossibility_evidence(std::span<const Word> words, std::size_t max_body_length,
                                   std::size_t substitution_bound, std::size_t candidate_cap) {
    return admissible_one_nt_productions(words, max_body_length, substitution_bound, candidate_cap)
        .all_terminal_or_trivial;
}

std::string render_one_nt_body(const AdmissibleProductionReport& report, const OneNtBody& body) {
    if (body.empty())
        return "<eps>";
    std::string out;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += body[i].is_terminal() ? to_utf8(body[i].code_point()) : report.start_name;
    }
    return out;
}

}  // namespace varstar
