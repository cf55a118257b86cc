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

// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "varstar/varstar.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_equal = 1;
constexpr int exit_usage = 2;
constexpr int exit_runtime = 3;

template <typename T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const noexcept { Destroy(p); }
};

using Words = std::unique_ptr<vs_words, Deleter<vs_words, vs_words_destroy>>;
using Complexity = std::unique_ptr<vs_complexity, Deleter<vs_complexity, vs_complexity_destroy>>;
using GrammarHandle = std::unique_ptr<vs_grammar, Deleter<vs_grammar, vs_grammar_destroy>>;
using Equivalence = std::unique_ptr<vs_equivalence, Deleter<vs_equivalence, vs_equivalence_destroy>>;
using Lemma = std::unique_ptr<vs_lemma, Deleter<vs_lemma, vs_lemma_destroy>>;

struct CliFailure {
    int code;
};

void check(vs_status status) {
    if (status == VS_OK)
        return;
    std::cerr << "error: " << vs_last_error() << "\n";
    switch (status) {
        case VS_ERR_BOUND:
        case VS_ERR_INTERNAL:
            throw CliFailure{exit_runtime};
        default:
            throw CliFailure{exit_usage};
    }
}

// Takes ownership of a library string and prints it.
void emit(char* s, bool newline = false) {
    std::cout << s;
    if (newline)
        std::cout << "\n";
    vs_string_free(s);
}

struct WordArgs {
    std::vector<std::string> words;
    bool from_stdin = false;
    bool json = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("words", words, "Nonempty words; each character is one terminal symbol");
        cmd->add_flag("--stdin", from_stdin, "Also read words from standard input, one per line");
        cmd->add_flag("--json", json, "Machine-readable JSON output");
    }

    vs_format format() const { return json ? VS_FORMAT_JSON : VS_FORMAT_TEXT; }

    Words load() const {
        std::vector<std::string> all = words;
        if (from_stdin) {
            std::string token;
            while (std::cin >> token)
                all.push_back(token);
        }
        if (all.empty()) {
            std::cerr << "error: at least one word is required\n";
            throw CliFailure{exit_usage};
        }
        vs_words* raw = nullptr;
        check(vs_words_create(&raw));
        Words handle(raw);
        for (const auto& w : all)
            check(vs_words_add(handle.get(), w.c_str()));
        return handle;
    }
};

GrammarHandle synthesize(const vs_words* words, bool lcm) {
    vs_grammar* raw = nullptr;
    check(vs_grammar_synthesize(words, lcm ? 1 : 0, &raw));
    return GrammarHandle(raw);
}

GrammarHandle load_grammar(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open grammar file '" << path << "'\n";
        throw CliFailure{exit_usage};
    }
    std::ostringstream text;
    text << in.rdbuf();
    vs_grammar* raw = nullptr;
    const vs_status status = vs_grammar_parse(text.str().c_str(), &raw);
    if (status != VS_OK)
        std::cerr << path << ": ";
    check(status);
    return GrammarHandle(raw);
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonterminal complexity of star-union languages w1* + ... + wn*"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(vs_version()));

    WordArgs var_args;
    auto* var_cmd = app.add_subcommand("var", "Compute the nonterminal complexity");
    var_args.attach(var_cmd);

    WordArgs synth_args;
    bool synth_lcm = false;
    auto* synth_cmd = app.add_subcommand("synth", "Print a grammar with the minimal number of nonterminals");
    synth_args.attach(synth_cmd);
    synth_cmd->add_flag("--lcm", synth_lcm, "Use the lcm of the exponents as pump modulus");

    WordArgs verify_args;
    std::size_t max_length = 24;
    std::string grammar_path;
    bool verify_lcm = false;
    auto* verify_cmd = app.add_subcommand("verify", "Compare a grammar with the star-union up to a length bound");
    verify_args.attach(verify_cmd);
    verify_cmd->add_option("--max-length", max_length, "Length bound for the comparison")->capture_default_str();
    verify_cmd->add_option("--grammar", grammar_path, "Grammar file to check instead of the synthesized one");
    verify_cmd->add_flag("--lcm", verify_lcm, "Use the lcm modulus when synthesizing");

    WordArgs classes_args;
    auto* classes_cmd = app.add_subcommand("classes", "Partition the words into conjugacy classes");
    classes_args.attach(classes_cmd);

    WordArgs lemma_args;
    std::size_t max_body_length = 0;
    std::size_t substitution_bound = 0;
    auto* lemma_cmd = app.add_subcommand("lemma", "Search for admissible one-nonterminal productions");
    lemma_args.attach(lemma_cmd);
    lemma_cmd->add_option("--max-body-length", max_body_length,
                          "Longest candidate body (default: 2*max|w|+1 clamped to [4, 8])");
    lemma_cmd->add_option("--substitution-bound", substitution_bound,
                          "Longest language word substituted for the nonterminal (default: 2*max|w|+2)");

    std::string family_name;
    std::size_t family_size = 0;
    auto* family_cmd = app.add_subcommand("family", "Print a named word family, one word per line");
    family_cmd->add_option("name", family_name, "Family name (gruska)")->required();
    family_cmd->add_option("n", family_size, "Family size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*var_cmd) {
            const Words words = var_args.load();
            vs_complexity* raw = nullptr;
            check(vs_complexity_compute(words.get(), &raw));
            const Complexity result(raw);
            char* out = nullptr;
            check(vs_complexity_render(result.get(), var_args.format(), &out));
            emit(out, var_args.json);
        } else if (*synth_cmd) {
            const Words words = synth_args.load();
            const GrammarHandle g = synthesize(words.get(), synth_lcm);
            char* out = nullptr;
            check(vs_grammar_serialize(g.get(), &out));
            if (synth_args.json) {
                std::cout << "{\"grammar\":" << json_string(out)
                          << ",\"nonterminals\":" << vs_grammar_nonterminal_count(g.get()) << "}\n";
                vs_string_free(out);
            } else {
                emit(out, true);
            }
        } else if (*verify_cmd) {
            const Words words = verify_args.load();
            const GrammarHandle g =
                grammar_path.empty() ? synthesize(words.get(), verify_lcm) : load_grammar(grammar_path);
            vs_equivalence* raw = nullptr;
            check(vs_verify(g.get(), words.get(), max_length, &raw));
            const Equivalence report(raw);
            char* out = nullptr;
            check(vs_equivalence_render(report.get(), verify_args.format(), &out));
            emit(out, verify_args.json);
            return vs_equivalence_equal(report.get()) ? exit_ok : exit_not_equal;
        } else if (*classes_cmd) {
            const Words words = classes_args.load();
            char* out = nullptr;
            check(vs_classes_render(words.get(), classes_args.format(), &out));
            emit(out, classes_args.json);
        } else if (*lemma_cmd) {
            const Words words = lemma_args.load();
            if (lemma_cmd->count("--max-body-length") == 0)
                max_body_length = std::clamp<std::size_t>(2 * vs_words_max_length(words.get()) + 1, 4, 8);
            if (lemma_cmd->count("--substitution-bound") == 0)
                substitution_bound = vs_default_substitution_bound(words.get());
            vs_lemma* raw = nullptr;
            check(vs_lemma_search(words.get(), max_body_length, substitution_bound, &raw));
            const Lemma report(raw);
            char* out = nullptr;
            check(vs_lemma_render(report.get(), lemma_args.format(), &out));
            emit(out, lemma_args.json);
        } else if (*family_cmd) {
            vs_words* raw = nullptr;
            check(vs_family(family_name.c_str(), family_size, &raw));
            const Words words(raw);
            char* out = nullptr;
            check(vs_words_render(words.get(), &out));
            emit(out);
        }
    } catch (const CliFailure& failure) {
        return failure.code;
    }
    return exit_ok;
}
