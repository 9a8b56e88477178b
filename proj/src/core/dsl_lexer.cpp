// Copyright 2026 The cforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsl_lexer.hpp"

#include <cctype>

namespace cforge::dsl {

std::string_view describe(TokenKind kind) noexcept
{
    switch (kind) {
    case TokenKind::word: return "identifier";
    case TokenKind::number: return "number";
    case TokenKind::string: return "string";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::at: return "'@'";
    case TokenKind::comma: return "','";
    case TokenKind::end: return "end of input";
    }
    return "token";
}

bool is_word_char(char c) noexcept
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '/';
}

bool is_bare_word(std::string_view s) noexcept
{
    if (s.empty())
        return false;
    for (char c : s) {
        if (!is_word_char(c))
            return false;
    }
    return true;
}

std::string quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out += c;
        }
    }
    out += '"';
    return out;
}

namespace {

bool is_number(std::string_view s)
{
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == 0)
        return false;
    if (i == s.size())
        return true;
    if (s[i] != '.' || i + 1 == s.size())
        return false;
    for (++i; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    }
    return true;
}

class Lexer {
public:
    Lexer(std::string_view text, const std::string& file, Diagnostics& diags)
        : text_(text), file_(file), diags_(diags)
    {
    }

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n' || c == '\r' || c == ' ' || c == '\t' || c == '\f' || c == '\v') {
                advance();
                continue;
            }
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '\r')
                    advance();
                continue;
            }
            const int line = line_, col = col_;
            if (c == '{' || c == '}' || c == '@' || c == ',') {
                advance();
                const TokenKind kind = c == '{' ? TokenKind::lbrace
                                       : c == '}' ? TokenKind::rbrace
                                       : c == '@' ? TokenKind::at
                                                  : TokenKind::comma;
                out.push_back({kind, std::string(1, c), span(line, col, line, col)});
                continue;
            }
            if (c == '"') {
                out.push_back(lex_string(line, col));
                continue;
            }
            if (is_word_char(c)) {
                std::string word;
                int end_line = line, end_col = col;
                while (pos_ < text_.size() && is_word_char(text_[pos_])) {
                    word += text_[pos_];
                    end_line = line_;
                    end_col = col_;
                    advance();
                }
                const TokenKind kind = is_number(word) ? TokenKind::number : TokenKind::word;
                out.push_back({kind, std::move(word), span(line, col, end_line, end_col)});
                continue;
            }
            // one UTF-8 sequence counts as one offending character
            std::size_t len = 1;
            const auto u = static_cast<unsigned char>(c);
            if (u >= 0xC0)
                len = u >= 0xF0 ? 4 : u >= 0xE0 ? 3 : 2;
            const int end_col = col_ + static_cast<int>(std::min(len, text_.size() - pos_)) - 1;
            diags_.push_back(Diagnostic::error(codes::parse, "unexpected character", span(line, col, line, end_col)));
            for (std::size_t i = 0; i < len && pos_ < text_.size(); ++i)
                advance();
        }
        out.push_back({TokenKind::end, "", span(last_line_, last_col_, last_line_, last_col_)});
        return out;
    }

private:
    SourceSpan span(int l0, int c0, int l1, int c1) const { return {file_, l0, c0, l1, c1}; }

    void advance()
    {
        const char c = text_[pos_];
        last_line_ = line_;
        last_col_ = col_;
        ++pos_;
        const bool crlf = c == '\r' && pos_ < text_.size() && text_[pos_] == '\n';
        if (c == '\n' || (c == '\r' && !crlf)) {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
    }

    Token lex_string(int line, int col)
    {
        advance();  // opening quote
        std::string value;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '"') {
                const int el = line_, ec = col_;
                advance();
                return {TokenKind::string, std::move(value), span(line, col, el, ec)};
            }
            if (c == '\n' || c == '\r')
                break;
            if (c == '\\' && pos_ + 1 < text_.size()) {
                const char e = text_[pos_ + 1];
                const int el = line_, ec = col_ + 1;
                advance();
                advance();
                switch (e) {
                case 'n': value += '\n'; break;
                case 't': value += '\t'; break;
                case 'r': value += '\r'; break;
                case '"': value += '"'; break;
                case '\\': value += '\\'; break;
                default:
                    diags_.push_back(Diagnostic::error(codes::parse, std::string("unknown escape '\\") + e + "'",
                                                       span(el, ec - 1, el, ec)));
                }
                continue;
            }
            value += c;
            advance();
        }
        diags_.push_back(Diagnostic::error(codes::parse, "unterminated string", span(line, col, last_line_, last_col_)));
        return {TokenKind::string, std::move(value), span(line, col, last_line_, last_col_)};
    }

    std::string_view text_;
    const std::string& file_;
    Diagnostics& diags_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    int last_line_ = 1, last_col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text, const std::string& file, Diagnostics& diags)
{
    return Lexer(text, file, diags).run();
}

}  // namespace cforge::dsl
