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

#include "cforge/graph.hpp"
#include "cforge/interchange.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace cforge {

namespace {

constexpr std::string_view kWikiBanner =
    "<!-- Generated by cforge. Template and property names are illustrative; "
    "adapt them to the target wiki's ontology. -->\n";

/// Makes `text` safe inside a template argument or property value.
std::string wiki_escape(std::string_view text)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '|') {
            out += "{{!}}";
        } else if ((c == '}' || c == ']') && i + 1 < text.size() && text[i + 1] == c) {
            out += c == '}' ? "&#125;&#125;" : "&#93;&#93;";
            ++i;
        } else if (c == '\n') {
            out += ' ';
        } else {
            out += c;
        }
    }
    return out;
}

/// Page file names keep [A-Za-z0-9._-]; anything else becomes "_XX" (hex).
std::string page_name(std::string_view prefix, std::string_view id)
{
    std::string out(prefix);
    out += '_';
    for (unsigned char c : id) {
        if (std::isalnum(c) || c == '.' || c == '-') {
            out += static_cast<char>(c);
        } else {
            char buf[4];
            std::snprintf(buf, sizeof buf, "_%02X", c);
            out += buf;
        }
    }
    return out + ".wiki";
}

std::string block_label(int block) { return "Block " + std::to_string(block); }

SourceSet wiki_pages(const Model& model)
{
    SourceSet pages;
    const ModelData& m = model.data();
    for (const auto& block : m.blocks) {
        for (const auto& c : block.competencies) {
            std::ostringstream p;
            p << kWikiBanner;
            p << "{{Competency\n|id=" << wiki_escape(c.id) << "\n|block=" << block_label(block.id)
              << "\n|statement=" << wiki_escape(c.statement) << "\n}}\n";
            p << "[[Belongs to block::" << block_label(block.id) << "]]\n";
            p << "== Knowledge ==\n";
            for (const auto& r : c.topic_reqs) {
                p << "{{#subobject:|Requires topic=" << wiki_escape(r.topic)
                  << "|Required level=" << to_string(r.level) << "}}\n";
            }
            p << "== Skills ==\n";
            for (const auto& s : c.skill_reqs)
                p << "[[Requires skill::" << wiki_escape(s) << "]]\n";
            p << "== Dispositions ==\n";
            for (const auto& d : c.disposition_reqs)
                p << "[[Requires disposition::" << wiki_escape(d) << "]]\n";
            p << "[[Category:Competency]]\n";
            pages.push_back({page_name("Competency", c.id), p.str()});
        }
    }
    for (const auto& cat : m.catalogs) {
        for (const auto& a : cat.areas) {
            std::ostringstream p;
            p << kWikiBanner;
            p << "{{Knowledge area\n|id=" << wiki_escape(a.id) << "\n|title=" << wiki_escape(a.title)
              << "\n|catalog=" << wiki_escape(cat.name);
            if (a.category)
                p << "\n|category=" << wiki_escape(*a.category);
            p << "\n}}\n";
            for (const auto& t : a.topics)
                p << "{{Topic|id=" << wiki_escape(t.id) << "|title=" << wiki_escape(t.title) << "}}\n";
            p << "[[Category:Knowledge area]]\n";
            pages.push_back({page_name("Area", a.id), p.str()});
        }
    }
    for (const auto& c : m.courses) {
        std::ostringstream p;
        p << kWikiBanner;
        p << "{{Course\n|id=" << wiki_escape(c.id) << "\n|title=" << wiki_escape(c.title) << "\n|year=" << c.year
          << "\n}}\n";
        for (const auto& o : c.outcomes) {
            p << "== Outcome " << wiki_escape(o.id) << " ==\n";
            if (!o.statement.empty())
                p << wiki_escape(o.statement) << "\n";
            for (const auto& t : o.targets) {
                p << "{{#subobject:|Outcome=" << wiki_escape(o.id) << "|Targets topic=" << wiki_escape(t.topic)
                  << "|Target level=" << to_string(t.level) << "}}\n";
            }
            for (const auto& s : o.skills_exercised)
                p << "{{#subobject:|Outcome=" << wiki_escape(o.id) << "|Exercises skill=" << wiki_escape(s) << "}}\n";
            for (const auto& d : o.dispositions_exercised) {
                p << "{{#subobject:|Outcome=" << wiki_escape(o.id) << "|Exercises disposition=" << wiki_escape(d)
                  << "}}\n";
            }
        }
        p << "[[Category:Course]]\n";
        pages.push_back({page_name("Course", c.id), p.str()});
    }
    std::sort(pages.begin(), pages.end(), [](const SourceFile& a, const SourceFile& b) { return a.name < b.name; });
    return pages;
}

std::string dot_quote(std::string_view text)
{
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string dot_id(const Node& n) { return dot_quote(std::string(to_string(n.kind)) + ":" + n.id); }

std::string dot_graph(const Model& model)
{
    const Graph graph = build_graph(model);
    std::ostringstream out;
    out << "digraph cforge {\n";
    out << "  rankdir=LR;\n";
    for (const Node& n : graph.nodes())
        out << "  " << dot_id(n) << " [label=" << dot_quote(n.id) << ", kind=" << to_string(n.kind) << "];\n";
    for (const Edge& e : graph.edges()) {
        std::string label(to_string(e.kind));
        if (e.level)
            label += " " + std::string(to_string(*e.level));
        if (e.stage)
            label += " stage " + std::to_string(*e.stage);
        out << "  " << dot_id(graph.node(e.from)) << " -> " << dot_id(graph.node(e.to))
            << " [label=" << dot_quote(label) << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string_view to_string(ExportFormat format) noexcept
{
    switch (format) {
    case ExportFormat::dsl: return "dsl";
    case ExportFormat::json: return "json";
    case ExportFormat::wiki: return "wiki";
    case ExportFormat::dot: return "dot";
    }
    return "?";
}

std::optional<ExportFormat> parse_export_format(std::string_view text) noexcept
{
    for (ExportFormat f : {ExportFormat::dsl, ExportFormat::json, ExportFormat::wiki, ExportFormat::dot}) {
        if (text == to_string(f))
            return f;
    }
    return std::nullopt;
}

SourceSet export_model(const Model& model, ExportFormat format)
{
    if (model.empty())
        return {};
    switch (format) {
    case ExportFormat::dsl: return serialize(model);
    case ExportFormat::json: return {{"model.json", model_to_json(model)}};
    case ExportFormat::wiki: return wiki_pages(model);
    case ExportFormat::dot: return {{"graph.dot", dot_graph(model)}};
    }
    return {};
}

}  // namespace cforge
