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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cforge {

/// Location in a source file. Lines and columns are 1-based; columns count
/// bytes. The end position is inclusive of the last character.
struct SourceSpan {
    std::string file;
    int line_start = 1;
    int col_start = 1;
    int line_end = 1;
    int col_end = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { error, warning };

// Diagnostic code registry. Codes are stable; tools match on them.
namespace codes {
inline constexpr std::string_view parse = "E_PARSE";
inline constexpr std::string_view bad_bloom = "E_BAD_BLOOM";
inline constexpr std::string_view bad_value = "E_BAD_VALUE";
inline constexpr std::string_view dup_id = "E_DUP_ID";
inline constexpr std::string_view dup_topic = "E_DUP_TOPIC";
inline constexpr std::string_view dangling_ref = "E_DANGLING_REF";
inline constexpr std::string_view empty_reqs = "E_EMPTY_REQS";
inline constexpr std::string_view bad_block = "E_BAD_BLOCK";
inline constexpr std::string_view unknown_id = "E_UNKNOWN_ID";
inline constexpr std::string_view delta_unresolved = "E_DELTA_UNRESOLVED";
inline constexpr std::string_view empty_cohort = "E_EMPTY_COHORT";
inline constexpr std::string_view io = "E_IO";
inline constexpr std::string_view usage = "E_USAGE";
inline constexpr std::string_view unknown_attr = "W_UNKNOWN_ATTR";
inline constexpr std::string_view emphasis_underserved = "W_EMPHASIS_UNDERSERVED";
}  // namespace codes

/// True if `code` belongs to the registry above.
bool is_registered_code(std::string_view code) noexcept;

struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;
    std::string message;
    SourceSpan span;

    static Diagnostic error(std::string_view code, std::string message, SourceSpan span = {});
    static Diagnostic warning(std::string_view code, std::string message, SourceSpan span = {});

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

bool has_errors(const Diagnostics& diags) noexcept;

/// "file:line:col: error E_CODE: message"
std::string format(const Diagnostic& d);

/// Thrown by query operations for caller errors (unknown ids, bad deltas).
class Error : public std::runtime_error {
public:
    explicit Error(Diagnostic diag);
    Error(std::string_view code, std::string message);

    const Diagnostic& diagnostic() const noexcept { return diags_.front(); }
    const Diagnostics& diagnostics() const noexcept { return diags_; }

    static Error from(Diagnostics diags);

private:
    explicit Error(Diagnostics diags, int);
    Diagnostics diags_;
};

}  // namespace cforge
