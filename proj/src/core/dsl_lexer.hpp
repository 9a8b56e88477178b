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

#pragma once

#include "cforge/diagnostic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cforge::dsl {

enum class TokenKind { word, number, string, lbrace, rbrace, at, comma, end };

std::string_view describe(TokenKind kind) noexcept;

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;  // unescaped contents for strings, raw text otherwise
    SourceSpan span;
};

/// Splits `text` into tokens. Lexical errors are appended to `diags`; the
/// offending characters are skipped. The stream always ends with one `end`
/// token located on the last character of the file.
std::vector<Token> tokenize(std::string_view text, const std::string& file, Diagnostics& diags);

/// Characters a bare word may contain.
bool is_word_char(char c) noexcept;

/// True if `s` would lex back as a single word or number token with the
/// same text.
bool is_bare_word(std::string_view s) noexcept;

std::string quote(std::string_view s);

}  // namespace cforge::dsl
