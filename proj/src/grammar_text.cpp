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

#include <map>

#include "varstar/error.hpp"
#include "varstar/grammar.hpp"

namespace varstar {

namespace {

constexpr std::string_view epsilon_token = "<eps>";
constexpr std::string_view arrow_token = "->";

bool is_space(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\r' || c == U'\n' || c == U'\v' || c == U'\f';
}

struct Token {
    std::string text;
    std::size_t column;  // 1-based, in code points
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;

        Word decoded;
        try {
            decoded = from_utf8(text.substr(begin, end - begin));
        } catch (const Error& e) {
            throw ParseError(line_no, 1, e.what());
        }
        Line line{line_no, {}};
        std::size_t i = 0;
        while (i < decoded.size()) {
            if (decoded[i] == U'#')
                break;
            if (is_space(decoded[i])) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < decoded.size() && !is_space(decoded[i]) && decoded[i] != U'#')
                ++i;
            line.tokens.push_back({to_utf8(std::u32string_view(decoded).substr(start, i - start)), start + 1});
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        begin = end + 1;
    }
    return lines;
}

std::size_t code_points(std::string_view s) {
    std::size_t n = 0;
    for (char c : s)
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80)
            ++n;
    return n;
}

}  // namespace

std::string render_body(const Grammar& g, const Body& body) {
    if (body.empty())
        return std::string(epsilon_token);
    std::string out;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += body[i].is_terminal() ? to_utf8(body[i].code_point()) : g.nonterminals()[body[i].index()];
    }
    return out;
}

std::string serialize(const Grammar& g) {
    for (char32_t t : g.terminals()) {
        const std::string spelled = to_utf8(t);
        if (is_space(t) || t == U'|' || t == U'#' || g.find_nonterminal(spelled))
            throw Error(ErrorCode::invalid_input,
                        "terminal '" + spelled + "' cannot be written in the grammar text format");
    }
    std::string out;
    for (std::size_t head = 0; head < g.nonterminal_count(); ++head) {
        if (head > 0)
            out += '\n';
        out += g.nonterminals()[head];
        out += " ->";
        bool first = true;
        for (const auto& p : g.productions()) {
            if (p.head != head)
                continue;
            out += first ? " " : " | ";
            out += render_body(g, p.body);
            first = false;
        }
    }
    return out;
}

Grammar parse_grammar(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, 1, "missing start declaration: no productions found");

    std::vector<std::string> names;
    std::map<std::string, std::size_t, std::less<>> index_of;
    for (const auto& line : lines) {
        const Token& head = line.tokens.front();
        if (!is_nonterminal_name(head.text))
            throw ParseError(line.number, head.column,
                             "expected a nonterminal name (uppercase-initial identifier), found '" + head.text + "'");
        if (line.tokens.size() < 2 || line.tokens[1].text != arrow_token) {
            const std::size_t col = line.tokens.size() < 2
                                        ? head.column + code_points(head.text)
                                        : line.tokens[1].column;
            throw ParseError(line.number, col, "expected '->' after '" + head.text + "'");
        }
        if (index_of.emplace(head.text, names.size()).second)
            names.push_back(head.text);
    }

    std::vector<Production> productions;
    for (const auto& line : lines) {
        const std::size_t head = index_of.at(line.tokens.front().text);
        std::vector<const Token*> alternative;
        auto finish = [&](std::size_t column) {
            if (alternative.empty())
                throw ParseError(line.number, column, "empty alternative; write <eps> for the empty body");
            Body body;
            if (alternative.size() == 1 && alternative.front()->text == epsilon_token) {
                productions.push_back({head, {}});
                alternative.clear();
                return;
            }
            for (const Token* tok : alternative) {
                if (tok->text == epsilon_token)
                    throw ParseError(line.number, tok->column, "<eps> must stand alone in an alternative");
                if (auto it = index_of.find(tok->text); it != index_of.end()) {
                    body.push_back(Symbol::nonterminal(it->second));
                } else if (code_points(tok->text) == 1) {
                    body.push_back(Symbol::terminal(from_utf8(tok->text).front()));
                } else {
                    throw ParseError(line.number, tok->column, "unknown symbol '" + tok->text + "'");
                }
            }
            productions.push_back({head, std::move(body)});
            alternative.clear();
        };

        std::size_t column = line.tokens[1].column + 2;
        for (std::size_t i = 2; i < line.tokens.size(); ++i) {
            const Token& tok = line.tokens[i];
            if (tok.text == "|") {
                finish(tok.column);
            } else if (tok.text == arrow_token) {
                throw ParseError(line.number, tok.column, "unexpected '->'");
            } else {
                alternative.push_back(&tok);
            }
            column = tok.column + code_points(tok.text);
        }
        finish(column);
    }
    return Grammar(std::move(names), std::move(productions));
}

}  // namespace varstar
