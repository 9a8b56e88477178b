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

// Reader and canonical writer for the `.cdsl` competency-definition language.
// The grammar is documented in docs/grammar.ebnf.

#include "cforge/delta.hpp"
#include "cforge/diagnostic.hpp"
#include "cforge/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cforge {

struct SourceFile {
    std::string name;
    std::string text;  // UTF-8

    friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

using SourceSet = std::vector<SourceFile>;

struct ParseResult {
    std::optional<Draft> draft;  // present iff no error was found
    Diagnostics diagnostics;     // errors, or warnings accompanying a draft

    bool ok() const noexcept { return draft.has_value(); }
};

/// Parses every file of the set. Files are processed in name order, so the
/// result does not depend on the order of `sources`. References are left
/// unresolved; that is validate()'s job.
ParseResult parse(const SourceSet& sources);

/// Canonical text form of a model: one file per top-level kind
/// (catalog, competencies, courses, pathways, portfolio), declarations sorted
/// by id. Kinds with nothing to declare produce no file.
SourceSet serialize(const Model& model);

struct DeltaParseResult {
    std::optional<WhatIfDelta> delta;
    Diagnostics diagnostics;
};

/// Reads a what-if fragment made of `create`, `add` and `remove` lines.
DeltaParseResult parse_delta(std::string_view text, std::string_view file_name = "delta.cdsl");

/// Inverse of parse_delta.
std::string serialize_delta(const WhatIfDelta& delta);

}  // namespace cforge
