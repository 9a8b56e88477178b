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

#include "cforge/dsl.hpp"
#include "cforge/model.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace cforge {

enum class ExportFormat { dsl, json, wiki, dot };

std::string_view to_string(ExportFormat format) noexcept;
std::optional<ExportFormat> parse_export_format(std::string_view text) noexcept;

/// Version stamped into model.json as "schema_version".
inline constexpr int kModelSchemaVersion = 1;

struct LoadResult {
    std::optional<Model> model;
    Diagnostics diagnostics;

    bool ok() const noexcept { return model.has_value(); }
};

/// parse + validate.
LoadResult compile(const SourceSet& sources);

/// Reads every `.cdsl` file of `dir` (sorted by name) and compiles them.
/// A directory holding no `.cdsl` file but a `model.json` is read as JSON
/// interchange instead; an empty directory gives the empty model. Either a
/// whole model or no model: any error discards everything.
LoadResult load(const std::filesystem::path& dir);

/// model.json document, keys in stable (sorted) order, LF newlines.
std::string model_to_json(const Model& model);

/// Reads a model.json document into draft form.
ParseResult draft_from_json(std::string_view text, std::string_view file_name = "model.json");

/// Rendered files for `format`. The empty model gives no files.
SourceSet export_model(const Model& model, ExportFormat format);

/// Writes each file under `dir` (created if missing). Every file is written
/// to a temporary sibling and renamed into place. Throws Error(E_IO).
void write_files(const SourceSet& files, const std::filesystem::path& dir);

/// Short stable hash of the canonical form; identifies a model snapshot.
std::string fingerprint(const Model& model);

}  // namespace cforge
