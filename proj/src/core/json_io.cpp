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

#include "cforge/interchange.hpp"

#include "span_keys.hpp"

#include <json.hpp>

namespace cforge {

using nlohmann::json;

namespace {

json requirements(const std::vector<TopicRequirement>& reqs)
{
    json out = json::array();
    for (const auto& r : reqs)
        out.push_back({{"topic", r.topic}, {"level", to_string(r.level)}});
    return out;
}

json named(const auto& items)
{
    json out = json::array();
    for (const auto& i : items)
        out.push_back({{"id", i.id}, {"title", i.title}});
    return out;
}

json model_document(const ModelData& m)
{
    json doc;
    doc["schema_version"] = kModelSchemaVersion;
    doc["meta"] = json::object();
    for (const auto& [k, v] : m.meta)
        doc["meta"][k] = v;

    doc["catalogs"] = json::array();
    for (const auto& cat : m.catalogs) {
        json areas = json::array();
        for (const auto& a : cat.areas) {
            json area = {{"id", a.id}, {"title", a.title}, {"topics", named(a.topics)}};
            if (a.category)
                area["category"] = *a.category;
            areas.push_back(std::move(area));
        }
        doc["catalogs"].push_back({{"name", cat.name},
                                   {"version", cat.version},
                                   {"areas", std::move(areas)},
                                   {"skills", named(cat.skills)},
                                   {"dispositions", named(cat.dispositions)}});
    }

    doc["blocks"] = json::array();
    for (const auto& b : m.blocks) {
        json comps = json::array();
        for (const auto& c : b.competencies) {
            comps.push_back({{"id", c.id},
                             {"statement", c.statement},
                             {"requires", requirements(c.topic_reqs)},
                             {"skills", c.skill_reqs},
                             {"dispositions", c.disposition_reqs}});
        }
        doc["blocks"].push_back({{"id", b.id}, {"title", b.title}, {"competencies", std::move(comps)}});
    }

    doc["courses"] = json::array();
    for (const auto& c : m.courses) {
        json outcomes = json::array();
        for (const auto& o : c.outcomes) {
            outcomes.push_back({{"id", o.id},
                                {"statement", o.statement},
                                {"targets", requirements(o.targets)},
                                {"skills", o.skills_exercised},
                                {"dispositions", o.dispositions_exercised}});
        }
        doc["courses"].push_back({{"id", c.id},
                                  {"title", c.title},
                                  {"year", c.year},
                                  {"ects", c.ects},
                                  {"outcomes", std::move(outcomes)},
                                  {"paths", c.paths}});
    }

    doc["objects"] = json::array();
    for (const auto& o : m.objects) {
        json assessments = json::array();
        for (const auto& a : o.assessments)
            assessments.push_back({{"id", a.id}, {"kind", to_string(a.kind)}, {"outcomes", a.outcome_refs}});
        doc["objects"].push_back(
            {{"id", o.id}, {"title", o.title}, {"content", o.content_ref}, {"assessments", std::move(assessments)}});
    }

    doc["paths"] = json::array();
    for (const auto& p : m.paths)
        doc["paths"].push_back({{"id", p.id}, {"stages", p.stages}});

    doc["pathways"] = json::array();
    for (const auto& p : m.pathways)
        doc["pathways"].push_back({{"id", p.id}, {"title", p.title}, {"emphasizes", p.emphasized_blocks}});

    doc["portfolios"] = json::array();
    for (const auto& p : m.portfolios) {
        json records = json::array();
        for (const auto& r : p.records) {
            json links = json::array();
            for (const auto& s : r.linked_specs) {
                links.push_back({{"kind", s.kind == LinkKind::competency ? "competency" : "outcome"},
                                 {"ref", s.ref},
                                 {"level", to_string(s.level)}});
            }
            records.push_back({{"id", r.id},
                               {"title", r.title},
                               {"created", r.created},
                               {"revisions", r.revisions},
                               {"links", std::move(links)}});
        }
        doc["portfolios"].push_back({{"student", p.student}, {"records", std::move(records)}});
    }
    return doc;
}

// -- reading ------------------------------------------------------------------

struct SchemaError {
    std::string where;
    std::string what;
    std::string_view code = codes::parse;
};

class Reader {
public:
    explicit Reader(Draft& draft) : draft_(draft) {}

    void document(const json& doc)
    {
        if (!doc.is_object())
            throw SchemaError{"", "expected a JSON object"};
        if (doc.contains("schema_version")) {
            const json& v = doc.at("schema_version");
            if (!v.is_number_integer() || v.get<int>() != kModelSchemaVersion)
                throw SchemaError{"/schema_version", "unsupported schema version (expected " +
                                                         std::to_string(kModelSchemaVersion) + ")"};
        }
        ModelData& m = draft_.data;
        if (doc.contains("meta")) {
            const json& meta = doc.at("meta");
            if (!meta.is_object())
                throw SchemaError{"/meta", "expected an object"};
            for (const auto& [k, v] : meta.items())
                m.meta[k] = str(v, "/meta/" + k);
        }
        each(doc, "catalogs", "", [&](const json& j, const std::string& at) {
            Catalog cat;
            cat.name = field(j, "name", at);
            cat.version = opt_field(j, "version", at);
            each(j, "areas", at, [&](const json& a, const std::string& aat) {
                KnowledgeArea area;
                area.id = field(a, "id", aat);
                area.title = opt_field(a, "title", aat);
                if (a.contains("category"))
                    area.category = str(a.at("category"), aat + "/category");
                each(a, "topics", aat, [&](const json& t, const std::string& tat) {
                    area.topics.push_back({field(t, "id", tat), opt_field(t, "title", tat)});
                });
                cat.areas.push_back(std::move(area));
            });
            each(j, "skills", at, [&](const json& s, const std::string& sat) {
                cat.skills.push_back({field(s, "id", sat), opt_field(s, "title", sat)});
            });
            each(j, "dispositions", at, [&](const json& s, const std::string& sat) {
                cat.dispositions.push_back({field(s, "id", sat), opt_field(s, "title", sat)});
            });
            m.catalogs.push_back(std::move(cat));
        });
        each(doc, "blocks", "", [&](const json& j, const std::string& at) {
            CompetencyBlock block;
            block.id = integer(j, "id", at);
            block.title = opt_field(j, "title", at);
            each(j, "competencies", at, [&](const json& c, const std::string& cat) {
                Competency comp;
                comp.id = field(c, "id", cat);
                comp.block = block.id;
                comp.statement = opt_field(c, "statement", cat);
                comp.topic_reqs = reqs(c, "requires", cat);
                comp.skill_reqs = id_set(c, "skills", cat);
                comp.disposition_reqs = id_set(c, "dispositions", cat);
                draft_.competencies.push_back(std::move(comp));
            });
            m.blocks.push_back(std::move(block));
        });
        each(doc, "courses", "", [&](const json& j, const std::string& at) {
            Course course;
            course.id = field(j, "id", at);
            course.title = opt_field(j, "title", at);
            course.year = j.contains("year") ? integer(j, "year", at) : 0;
            if (j.contains("ects")) {
                if (!j.at("ects").is_number())
                    throw SchemaError{at + "/ects", "expected a number"};
                course.ects = j.at("ects").get<double>();
            }
            each(j, "outcomes", at, [&](const json& o, const std::string& oat) {
                LearningOutcome outcome;
                outcome.id = field(o, "id", oat);
                outcome.statement = opt_field(o, "statement", oat);
                outcome.targets = reqs(o, "targets", oat);
                outcome.skills_exercised = id_set(o, "skills", oat);
                outcome.dispositions_exercised = id_set(o, "dispositions", oat);
                course.outcomes.push_back(std::move(outcome));
            });
            for (const auto& p : id_set(j, "paths", at))
                course.paths.push_back(p);
            m.courses.push_back(std::move(course));
        });
        each(doc, "objects", "", [&](const json& j, const std::string& at) {
            LearningObject obj;
            obj.id = field(j, "id", at);
            obj.title = opt_field(j, "title", at);
            obj.content_ref = opt_field(j, "content", at);
            each(j, "assessments", at, [&](const json& a, const std::string& aat) {
                Assessment as;
                as.id = field(a, "id", aat);
                const std::string kind = field(a, "kind", aat);
                auto k = parse_assessment_kind(kind);
                if (!k)
                    throw SchemaError{aat + "/kind", "'" + kind + "' is not an assessment kind"};
                as.kind = *k;
                as.outcome_refs = id_set(a, "outcomes", aat);
                obj.assessments.push_back(std::move(as));
            });
            m.objects.push_back(std::move(obj));
        });
        each(doc, "paths", "", [&](const json& j, const std::string& at) {
            LearningPath p;
            p.id = field(j, "id", at);
            each(j, "stages", at, [&](const json& s, const std::string& sat) {
                if (!s.is_array())
                    throw SchemaError{sat, "expected an array of object ids"};
                std::vector<std::string> stage;
                for (std::size_t i = 0; i < s.size(); ++i)
                    stage.push_back(str(s[i], sat + "/" + std::to_string(i)));
                p.stages.push_back(std::move(stage));
            });
            m.paths.push_back(std::move(p));
        });
        each(doc, "pathways", "", [&](const json& j, const std::string& at) {
            Pathway p;
            p.id = field(j, "id", at);
            p.title = opt_field(j, "title", at);
            each(j, "emphasizes", at, [&](const json& b, const std::string& bat) {
                if (!b.is_number_integer())
                    throw SchemaError{bat, "expected a block number"};
                p.emphasized_blocks.insert(b.get<int>());
            });
            m.pathways.push_back(std::move(p));
        });
        each(doc, "portfolios", "", [&](const json& j, const std::string& at) {
            StudentPortfolio p;
            p.student = field(j, "student", at);
            each(j, "records", at, [&](const json& r, const std::string& rat) {
                AchievementRecord rec;
                rec.id = field(r, "id", rat);
                rec.student = p.student;
                rec.title = opt_field(r, "title", rat);
                rec.created = opt_field(r, "created", rat);
                rec.revisions = r.contains("revisions") ? integer(r, "revisions", rat) : 1;
                each(r, "links", rat, [&](const json& l, const std::string& lat) {
                    LinkedSpec spec;
                    const std::string kind = field(l, "kind", lat);
                    if (kind == "competency")
                        spec.kind = LinkKind::competency;
                    else if (kind == "outcome")
                        spec.kind = LinkKind::outcome;
                    else
                        throw SchemaError{lat + "/kind", "expected 'competency' or 'outcome'"};
                    spec.ref = field(l, "ref", lat);
                    spec.level = level(l, "level", lat);
                    rec.linked_specs.push_back(std::move(spec));
                });
                p.records.push_back(std::move(rec));
            });
            m.portfolios.push_back(std::move(p));
        });
    }

private:
    template <class F>
    static void each(const json& j, const char* key, const std::string& at, F&& f)
    {
        if (!j.contains(key))
            return;
        const json& arr = j.at(key);
        const std::string where = at + "/" + key;
        if (!arr.is_array())
            throw SchemaError{where, "expected an array"};
        for (std::size_t i = 0; i < arr.size(); ++i)
            f(arr[i], where + "/" + std::to_string(i));
    }

    static std::string str(const json& v, const std::string& at)
    {
        if (!v.is_string())
            throw SchemaError{at, "expected a string"};
        return v.get<std::string>();
    }

    static std::string field(const json& j, const char* key, const std::string& at)
    {
        if (!j.is_object() || !j.contains(key))
            throw SchemaError{at, std::string("missing field '") + key + "'"};
        return str(j.at(key), at + "/" + key);
    }

    static std::string opt_field(const json& j, const char* key, const std::string& at)
    {
        return j.is_object() && j.contains(key) ? str(j.at(key), at + "/" + key) : std::string{};
    }

    static int integer(const json& j, const char* key, const std::string& at)
    {
        if (!j.contains(key) || !j.at(key).is_number_integer())
            throw SchemaError{at + "/" + key, "expected an integer"};
        return j.at(key).get<int>();
    }

    static BloomLevel level(const json& j, const char* key, const std::string& at)
    {
        const std::string code = field(j, key, at);
        auto l = parse_bloom(code);
        if (!l)
            throw SchemaError{at + "/" + key, "'" + code + "' is not a Bloom level (A1, A2, B1, B2, C1, C2)",
                              codes::bad_bloom};
        return *l;
    }

    static std::vector<TopicRequirement> reqs(const json& j, const char* key, const std::string& at)
    {
        std::vector<TopicRequirement> out;
        each(j, key, at, [&](const json& r, const std::string& rat) {
            out.push_back({field(r, "topic", rat), level(r, "level", rat)});
        });
        return out;
    }

    static std::set<std::string> id_set(const json& j, const char* key, const std::string& at)
    {
        std::set<std::string> out;
        each(j, key, at, [&](const json& v, const std::string& vat) { out.insert(str(v, vat)); });
        return out;
    }

    Draft& draft_;
};

SourceSpan offset_span(std::string_view text, std::size_t offset, const std::string& file)
{
    int line = 1, col = 1;
    const std::size_t end = text.empty() ? 0 : std::min(offset == 0 ? 0 : offset - 1, text.size() - 1);
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {file, line, col, line, col};
}

}  // namespace

std::string model_to_json(const Model& model) { return model_document(model.data()).dump(2) + "\n"; }

ParseResult draft_from_json(std::string_view text, std::string_view file_name)
{
    ParseResult result;
    const std::string file(file_name);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        result.diagnostics.push_back(
            Diagnostic::error(codes::parse, std::string("malformed JSON: ") + e.what(), offset_span(text, e.byte, file)));
        return result;
    }
    Draft draft;
    draft.spans.emplace("", SourceSpan{file, 1, 1, 1, 1});
    try {
        Reader(draft).document(doc);
    } catch (const SchemaError& e) {
        result.diagnostics.push_back(Diagnostic::error(
            e.code, (e.where.empty() ? std::string("document") : "at " + e.where) + ": " + e.what,
            SourceSpan{file, 1, 1, 1, 1}));
        return result;
    }
    result.draft = std::move(draft);
    return result;
}

}  // namespace cforge
