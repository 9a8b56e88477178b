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

#include "cforge/dsl.hpp"

#include "dsl_lexer.hpp"

#include <charconv>
#include <sstream>

namespace cforge {

namespace {

std::string id(std::string_view s) { return dsl::is_bare_word(s) ? std::string(s) : dsl::quote(s); }

std::string number(double v)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
    return std::string(buf, r.ptr);
}

void write_requirements(std::ostream& os, const char* indent, const char* verb,
                        const std::vector<TopicRequirement>& reqs, const std::set<std::string>& skills,
                        const std::set<std::string>& dispositions)
{
    for (const auto& r : reqs)
        os << indent << verb << ' ' << id(r.topic) << " @ " << to_string(r.level) << '\n';
    for (const auto& s : skills)
        os << indent << "skill " << id(s) << '\n';
    for (const auto& d : dispositions)
        os << indent << "disposition " << id(d) << '\n';
}

std::string catalog_file(const ModelData& m)
{
    std::ostringstream os;
    for (const auto& [k, v] : m.meta)
        os << "meta " << dsl::quote(k) << ' ' << dsl::quote(v) << '\n';
    for (const auto& cat : m.catalogs) {
        if (os.tellp() > 0)
            os << '\n';
        os << "catalog " << dsl::quote(cat.name);
        if (!cat.version.empty())
            os << " version " << dsl::quote(cat.version);
        os << " {\n";
        for (const auto& area : cat.areas) {
            os << "  area " << id(area.id) << ' ' << dsl::quote(area.title);
            if (area.category)
                os << " category " << dsl::quote(*area.category);
            os << " {\n";
            for (const auto& t : area.topics)
                os << "    topic " << id(t.id.substr(area.id.size() + 1)) << ' ' << dsl::quote(t.title) << '\n';
            os << "  }\n";
        }
        for (const auto& s : cat.skills)
            os << "  skill " << id(s.id) << ' ' << dsl::quote(s.title) << '\n';
        for (const auto& d : cat.dispositions)
            os << "  disposition " << id(d.id) << ' ' << dsl::quote(d.title) << '\n';
        os << "}\n";
    }
    return os.str();
}

std::string competencies_file(const ModelData& m)
{
    std::ostringstream os;
    for (const auto& block : m.blocks) {
        if (os.tellp() > 0)
            os << '\n';
        os << "block " << block.id << ' ' << dsl::quote(block.title) << " {\n";
        for (const auto& c : block.competencies) {
            os << "  competency " << dsl::quote(c.id);
            if (!c.statement.empty())
                os << ' ' << dsl::quote(c.statement);
            os << " {\n";
            write_requirements(os, "    ", "requires", c.topic_reqs, c.skill_reqs, c.disposition_reqs);
            os << "  }\n";
        }
        os << "}\n";
    }
    return os.str();
}

std::string courses_file(const ModelData& m)
{
    std::ostringstream os;
    auto sep = [&] {
        if (os.tellp() > 0)
            os << '\n';
    };
    for (const auto& c : m.courses) {
        sep();
        os << "course " << id(c.id) << ' ' << dsl::quote(c.title) << " {\n";
        os << "  year " << c.year << '\n';
        os << "  ects " << number(c.ects) << '\n';
        for (const auto& o : c.outcomes) {
            os << "  outcome " << id(o.id);
            if (!o.statement.empty())
                os << ' ' << dsl::quote(o.statement);
            os << " {\n";
            write_requirements(os, "    ", "targets", o.targets, o.skills_exercised, o.dispositions_exercised);
            os << "  }\n";
        }
        for (const auto& p : c.paths)
            os << "  path " << id(p) << '\n';
        os << "}\n";
    }
    for (const auto& obj : m.objects) {
        sep();
        os << "object " << id(obj.id) << ' ' << dsl::quote(obj.title) << " {\n";
        if (!obj.content_ref.empty())
            os << "  content " << dsl::quote(obj.content_ref) << '\n';
        for (const auto& a : obj.assessments) {
            os << "  assessment " << to_string(a.kind) << ' ' << id(a.id) << " {\n";
            for (const auto& ref : a.outcome_refs)
                os << "    outcome " << id(ref) << '\n';
            os << "  }\n";
        }
        os << "}\n";
    }
    for (const auto& p : m.paths) {
        sep();
        os << "path " << id(p.id) << " {\n";
        for (const auto& stage : p.stages) {
            os << "  stage {";
            for (const auto& o : stage)
                os << ' ' << id(o);
            os << " }\n";
        }
        os << "}\n";
    }
    return os.str();
}

std::string pathways_file(const ModelData& m)
{
    std::ostringstream os;
    for (const auto& p : m.pathways) {
        if (os.tellp() > 0)
            os << '\n';
        os << "pathway " << id(p.id) << ' ' << dsl::quote(p.title) << " {\n  emphasizes";
        bool first = true;
        for (int b : p.emphasized_blocks) {
            os << (first ? " " : ", ") << b;
            first = false;
        }
        os << "\n}\n";
    }
    return os.str();
}

std::string portfolio_file(const ModelData& m)
{
    std::ostringstream os;
    for (const auto& p : m.portfolios) {
        if (os.tellp() > 0)
            os << '\n';
        os << "portfolio " << id(p.student) << " {\n";
        for (const auto& r : p.records) {
            os << "  achievement " << id(r.id) << ' ' << dsl::quote(r.title) << " {\n";
            os << "    created " << dsl::quote(r.created) << '\n';
            os << "    revisions " << r.revisions << '\n';
            for (const auto& spec : r.linked_specs) {
                os << "    links " << (spec.kind == LinkKind::competency ? "competency " : "outcome ")
                   << (spec.kind == LinkKind::competency ? dsl::quote(spec.ref) : id(spec.ref)) << " @ "
                   << to_string(spec.level) << '\n';
            }
            os << "  }\n";
        }
        os << "}\n";
    }
    return os.str();
}

}  // namespace

SourceSet serialize(const Model& model)
{
    const ModelData& m = model.data();
    SourceSet out;
    auto add = [&](const char* name, std::string text) {
        if (!text.empty())
            out.push_back({name, std::move(text)});
    };
    add("catalog.cdsl", catalog_file(m));
    add("competencies.cdsl", competencies_file(m));
    add("courses.cdsl", courses_file(m));
    add("pathways.cdsl", pathways_file(m));
    add("portfolio.cdsl", portfolio_file(m));
    return out;
}

std::string serialize_delta(const WhatIfDelta& delta)
{
    std::ostringstream os;
    for (const auto& c : delta.creations) {
        os << "create " << id(outcome_ref(c.course, c.outcome));
        if (!c.statement.empty())
            os << ' ' << dsl::quote(c.statement);
        os << '\n';
    }
    for (const auto& e : delta.removals)
        os << "remove " << id(outcome_ref(e.course, e.outcome)) << " targets " << id(e.topic) << " @ "
           << to_string(e.level) << '\n';
    for (const auto& e : delta.additions)
        os << "add " << id(outcome_ref(e.course, e.outcome)) << " targets " << id(e.topic) << " @ "
           << to_string(e.level) << '\n';
    return os.str();
}

}  // namespace cforge
