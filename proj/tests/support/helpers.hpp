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

#include "cforge/graph.hpp"
#include "cforge/interchange.hpp"

#include <doctest.h>

#include <filesystem>
#include <set>
#include <string>

namespace cforge::testing {

inline std::filesystem::path source_dir() { return CFORGE_SOURCE_DIR; }
inline std::filesystem::path fixture_dir() { return source_dir() / "fixtures" / "isanum"; }
inline std::filesystem::path empty_fixture_dir() { return source_dir() / "fixtures" / "empty"; }

/// Shared prelude of the hand-built micro-models: one area with four topics,
/// two skills, one disposition, one block.
inline constexpr const char* kMicroCatalog = R"(
catalog "micro" {
  area a "Area A" {
    topic t1 "Topic 1"
    topic t2 "Topic 2"
    topic t3 "Topic 3"
    topic t4 "Topic 4"
  }
  skill s1 "Skill 1"
  skill s2 "Skill 2"
  disposition d1 "Disposition 1"
}
block 1 "Block one"
)";

/// Compiles a single in-memory file; fails the test on any error.
inline Model compile_text(const std::string& text, const std::string& name = "micro.cdsl")
{
    LoadResult r = compile({{name, text}});
    if (!r.ok()) {
        for (const auto& d : r.diagnostics)
            MESSAGE(format(d));
    }
    REQUIRE(r.ok());
    return *r.model;
}

inline Model micro(const std::string& body) { return compile_text(std::string(kMicroCatalog) + body); }

/// Diagnostics of a text expected not to compile.
inline Diagnostics compile_errors(const std::string& text, const std::string& name = "bad.cdsl")
{
    LoadResult r = compile({{name, text}});
    CHECK_FALSE(r.ok());
    return r.diagnostics;
}

inline bool has_code(const Diagnostics& diags, std::string_view code)
{
    for (const auto& d : diags)
        if (d.code == code)
            return true;
    return false;
}

/// The ISANUM fixture, loaded once per process.
inline const Model& fixture_model()
{
    static const Model model = [] {
        LoadResult r = load(fixture_dir());
        REQUIRE(r.ok());
        return *r.model;
    }();
    return model;
}

inline const Graph& fixture_graph()
{
    static const Graph graph = build_graph(fixture_model());
    return graph;
}

/// Copy of `data` without the named courses. Learning objects and paths are
/// dropped and portfolio links into the removed courses pruned, so the
/// result still validates.
inline ModelData without_courses(ModelData data, const std::set<std::string>& removed)
{
    std::erase_if(data.courses, [&](const Course& c) { return removed.contains(c.id); });
    data.objects.clear();
    data.paths.clear();
    for (auto& c : data.courses)
        c.paths.clear();
    for (auto& p : data.portfolios)
        for (auto& r : p.records)
            std::erase_if(r.linked_specs, [&](const LinkedSpec& s) {
                return s.kind == LinkKind::outcome && removed.contains(s.ref.substr(0, s.ref.find('/')));
            });
    return data;
}

inline Model validated(const ModelData& data)
{
    ValidationResult v = validate(data);
    for (const auto& d : v.diagnostics)
        MESSAGE(format(d));
    REQUIRE(v.ok());
    return *v.model;
}

}  // namespace cforge::testing
