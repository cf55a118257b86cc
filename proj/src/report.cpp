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

#include "varstar/report.hpp"

#include <json.hpp>

namespace varstar {

namespace {

using nlohmann::json;

std::string text_word(const Word& w) {
    return w.empty() ? "<eps>" : to_utf8(w);
}

json json_words(std::span<const Word> words) {
    json out = json::array();
    for (const auto& w : words)
        out.push_back(to_utf8(w));
    return out;
}

std::string text_words(std::span<const Word> words) {
    std::string out;
    for (const auto& w : words) {
        out += ' ';
        out += text_word(w);
    }
    return out;
}

json json_class(const ConjugacyClass& c) {
    return {{"members", json_words(c.members)}, {"representative", to_utf8(c.representative)}};
}

std::string text_classes(std::span<const ConjugacyClass> classes) {
    std::string out;
    for (const auto& c : classes)
        out += "[" + to_utf8(c.representative) + "]" + text_words(c.members) + "\n";
    return out;
}

}  // namespace

std::string render(const ComplexityResult& result, Format format) {
    if (format == Format::json) {
        json classes = json::array();
        for (const auto& c : result.classes)
            classes.push_back(json_class(c));
        return json{{"var", result.var}, {"classes", classes}, {"all_commute", result.all_commute}}.dump();
    }
    std::string out = "Var = " + std::to_string(result.var) + "\n";
    out += std::string("all_commute = ") + (result.all_commute ? "true" : "false") + "\n";
    out += "classes = " + std::to_string(result.classes.size()) + "\n";
    out += text_classes(result.classes);
    return out;
}

std::string render(std::span<const ConjugacyClass> classes, Format format) {
    if (format == Format::json) {
        json list = json::array();
        for (const auto& c : classes)
            list.push_back(json_class(c));
        return json{{"classes", list}}.dump();
    }
    return text_classes(classes);
}

std::string render(const EquivalenceReport& report, Format format) {
    if (format == Format::json) {
        return json{{"max_length", report.max_length},
                    {"equal", report.equal},
                    {"missing", json_words(report.missing)},
                    {"extra", json_words(report.extra)}}
            .dump();
    }
    std::string out = "max_length = " + std::to_string(report.max_length) + "\n";
    out += std::string("equal = ") + (report.equal ? "true" : "false") + "\n";
    out += "missing =" + text_words(report.missing) + "\n";
    out += "extra =" + text_words(report.extra) + "\n";
    return out;
}

std::string verdict_line(const AdmissibleProductionReport& report) {
    const std::string bounds = "max body length " + std::to_string(report.max_body_length) +
                               ", substitution bound " + std::to_string(report.substitution_bound);
    if (report.all_terminal_or_trivial)
        return "verdict: no one-nonterminal grammar within bounds (" + bounds +
               "); bounded evidence, not a proof";
    return "verdict: evidence not found; an admissible production with the start symbol exists within bounds (" +
           bounds + ")";
}

std::string render(const AdmissibleProductionReport& report, Format format) {
    if (format == Format::json) {
        json surviving = json::array();
        for (const auto& body : report.surviving)
            surviving.push_back(render_one_nt_body(report, body));
        return json{{"surviving", surviving},
                    {"parameters",
                     {{"max_body_length", report.max_body_length},
                      {"substitution_bound", report.substitution_bound}}},
                    {"all_terminal_or_trivial", report.all_terminal_or_trivial},
                    {"verdict", verdict_line(report)}}
            .dump();
    }
    std::string out = "surviving (" + std::to_string(report.surviving.size()) + "):\n";
    for (const auto& body : report.surviving)
        out += "  " + report.start_name + " -> " + render_one_nt_body(report, body) + "\n";
    out += "max_body_length = " + std::to_string(report.max_body_length) + "\n";
    out += "substitution_bound = " + std::to_string(report.substitution_bound) + "\n";
    out += std::string("all_terminal_or_trivial = ") + (report.all_terminal_or_trivial ? "true" : "false") + "\n";
    out += verdict_line(report) + "\n";
    return out;
}

}  // namespace varstar
