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

#include "cforge/diagnostic.hpp"

#include <algorithm>
#include <array>

namespace cforge {

bool is_registered_code(std::string_view code) noexcept
{
    static constexpr std::array registry = {
        codes::parse,           codes::bad_bloom,       codes::bad_value,
        codes::dup_id,          codes::dup_topic,       codes::dangling_ref,
        codes::empty_reqs,      codes::bad_block,       codes::unknown_id,
        codes::delta_unresolved, codes::empty_cohort,   codes::io,
        codes::usage,           codes::unknown_attr,    codes::emphasis_underserved,
    };
    return std::find(registry.begin(), registry.end(), code) != registry.end();
}

Diagnostic Diagnostic::error(std::string_view code, std::string message, SourceSpan span)
{
    return {Severity::error, std::string(code), std::move(message), std::move(span)};
}

Diagnostic Diagnostic::warning(std::string_view code, std::string message, SourceSpan span)
{
    return {Severity::warning, std::string(code), std::move(message), std::move(span)};
}

bool has_errors(const Diagnostics& diags) noexcept
{
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::string format(const Diagnostic& d)
{
    std::string out;
    if (!d.span.file.empty()) {
        out += d.span.file + ":" + std::to_string(d.span.line_start) + ":" +
               std::to_string(d.span.col_start) + ": ";
    }
    out += d.severity == Severity::error ? "error " : "warning ";
    out += d.code + ": " + d.message;
    return out;
}

Error::Error(Diagnostic diag) : Error(Diagnostics{std::move(diag)}, 0) {}

Error::Error(std::string_view code, std::string message)
    : Error(Diagnostic::error(code, std::move(message)))
{
}

Error::Error(Diagnostics diags, int)
    : std::runtime_error(diags.empty() ? std::string("unknown error") : format(diags.front())),
      diags_(std::move(diags))
{
    if (diags_.empty())
        diags_.push_back(Diagnostic::error(codes::parse, "unknown error"));
}

Error Error::from(Diagnostics diags) { return Error(std::move(diags), 0); }

}  // namespace cforge
