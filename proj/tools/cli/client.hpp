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

// Thin C++ veneer over the C API for the command-line tool and the HTTP
// service. Nothing here knows the engine's C++ types.

#include "cforge/cforge.h"

#include <json.hpp>

#include <memory>
#include <string>
#include <utility>

namespace cforge::cli {

using nlohmann::json;

/// Shared, immutable model handle.
using ModelHandle = std::shared_ptr<const cforge_model>;

/// Outcome of one C API call: the status and the document it produced.
struct Reply {
    cforge_status status = CFORGE_OK;
    json doc;

    bool ok() const noexcept { return status == CFORGE_OK; }
};

namespace detail {

struct StringFree {
    void operator()(char* p) const noexcept { cforge_string_free(p); }
};

inline Reply take(cforge_status status, char* raw)
{
    std::unique_ptr<char, StringFree> text(raw);
    Reply r{status, json()};
    if (text)
        r.doc = json::parse(text.get(), nullptr, false);
    return r;
}

}  // namespace detail

/// Invokes `fn(args..., &out)` and parses the JSON it hands back.
template <class Fn, class... Args>
Reply call(Fn fn, Args&&... args)
{
    char* out = nullptr;
    const cforge_status status = fn(std::forward<Args>(args)..., &out);
    return detail::take(status, out);
}

struct Loaded {
    ModelHandle model;  // null on failure
    Reply reply;        // diagnostics (warnings on success)
};

inline Loaded load_model(const std::string& dir)
{
    cforge_model* raw = nullptr;
    char* out = nullptr;
    const cforge_status status = cforge_model_load_dir(dir.c_str(), &raw, &out);
    Loaded l;
    l.reply = detail::take(status, out);
    if (raw != nullptr)
        l.model = ModelHandle(raw, [](const cforge_model* m) { cforge_model_free(const_cast<cforge_model*>(m)); });
    return l;
}

/// The one JSON rendering shared by `--json` output and HTTP bodies, so
/// both are byte-identical for the same query.
inline std::string render(const json& doc) { return doc.dump(2) + "\n"; }

/// Builds a diagnostics document for errors detected outside the engine.
inline json diagnostic_document(const std::string& code, const std::string& message)
{
    return {{"diagnostics",
             json::array({{{"severity", "error"},
                           {"code", code},
                           {"message", message},
                           {"span", {{"file", ""}, {"line_start", 1}, {"col_start", 1}, {"line_end", 1}, {"col_end", 1}}}}})}};
}

}  // namespace cforge::cli
