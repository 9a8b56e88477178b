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

#include "cforge/report_json.hpp"

#include "cforge/interchange.hpp"

namespace cforge::json {

namespace {

json offer_json(const Offer& o)
{
    return {{"course", o.course}, {"outcome", o.outcome}, {"level", to_string(o.level)}};
}

json status_json(const RequirementStatus& s)
{
    json j = {{"kind", to_string(s.kind)}, {"id", s.id}, {"satisfied", s.satisfied}};
    j["required"] = s.required ? json(to_string(*s.required)) : json(nullptr);
    j["best_offer"] = s.best_offer ? offer_json(*s.best_offer) : json(nullptr);
    return j;
}

std::string str_at(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
        throw Error(codes::parse, where + ": expected string field '" + key + "'");
    return j.at(key).get<std::string>();
}

std::vector<TargetEdit> edits_from(const json& doc, const char* key)
{
    std::vector<TargetEdit> out;
    if (!doc.contains(key))
        return out;
    const json& arr = doc.at(key);
    if (!arr.is_array())
        throw Error(codes::parse, std::string("/") + key + ": expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = std::string("/") + key + "/" + std::to_string(i);
        TargetEdit e;
        e.course = str_at(arr[i], "course", where);
        e.outcome = str_at(arr[i], "outcome", where);
        e.topic = str_at(arr[i], "topic", where);
        const std::string level = str_at(arr[i], "level", where);
        auto l = parse_bloom(level);
        if (!l)
            throw Error(codes::bad_bloom, where + ": '" + level + "' is not a Bloom level (A1..C2)");
        e.level = *l;
        out.push_back(std::move(e));
    }
    return out;
}

json edits_json(const std::vector<TargetEdit>& edits)
{
    json out = json::array();
    for (const auto& e : edits) {
        out.push_back(
            {{"course", e.course}, {"outcome", e.outcome}, {"topic", e.topic}, {"level", to_string(e.level)}});
    }
    return out;
}

}  // namespace

json to_json(const Fraction& f)
{
    return {{"num", f.num()}, {"den", f.den()}, {"value", f.to_decimal(2)}};
}

json to_json(const SourceSpan& span)
{
    return {{"file", span.file},
            {"line_start", span.line_start},
            {"col_start", span.col_start},
            {"line_end", span.line_end},
            {"col_end", span.col_end}};
}

json to_json(const Diagnostic& d)
{
    return {{"severity", d.severity == Severity::error ? "error" : "warning"},
            {"code", d.code},
            {"message", d.message},
            {"span", to_json(d.span)}};
}

json diagnostics_document(const Diagnostics& diags)
{
    json arr = json::array();
    for (const auto& d : diags)
        arr.push_back(to_json(d));
    return {{"diagnostics", std::move(arr)}};
}

json to_json(const CoverageReport& report)
{
    json statuses = json::array();
    for (const auto& s : report.statuses)
        statuses.push_back(status_json(s));
    return {{"competency", report.competency},
            {"topic_fraction", to_json(report.topic_fraction)},
            {"skills_ok", report.skills_ok},
            {"dispositions_ok", report.dispositions_ok},
            {"statuses", std::move(statuses)}};
}

json to_json(const CoverageMatrix& matrix)
{
    return {{"competencies", matrix.competencies}, {"courses", matrix.courses}, {"cells", matrix.cells}};
}

json to_json(const GapReport& report)
{
    json comps = json::array();
    for (const auto& c : report.competencies) {
        json gaps = json::array();
        for (const auto& g : c.gaps) {
            json j = status_json(g.status);
            j["reason"] = to_string(g.reason);
            gaps.push_back(std::move(j));
        }
        comps.push_back({{"competency", c.competency}, {"gaps", std::move(gaps)}});
    }
    return {{"competencies", std::move(comps)},
            {"orphan_topics", report.orphan_topics},
            {"untaught_topics", report.untaught_topics}};
}

json to_json(const PathwayProfile& profile)
{
    json blocks = json::array();
    for (const auto& b : profile.blocks) {
        blocks.push_back(
            {{"block", b.block}, {"mean_topic_fraction", to_json(b.mean_topic_fraction)}, {"emphasized", b.emphasized}});
    }
    return {{"pathway", profile.pathway},
            {"blocks", std::move(blocks)},
            {"warnings", diagnostics_document(profile.warnings).at("diagnostics")}};
}

json to_json(const WhatIfResult& result)
{
    json changed = json::array();
    for (const auto& c : result.changed)
        changed.push_back({{"competency", c.competency}, {"before", to_json(c.before)}, {"after", to_json(c.after)}});
    return {{"before", to_json(result.before)}, {"after", to_json(result.after)}, {"changed", std::move(changed)}};
}

json to_json(const Attainment& a)
{
    json evidence = json::array();
    for (const auto& e : a.evidence) {
        evidence.push_back({{"record", e.record},
                            {"topic", e.topic},
                            {"required", to_string(e.required)},
                            {"level", to_string(e.level)},
                            {"via", e.via == LinkKind::competency ? "competency" : "outcome"},
                            {"ref", e.ref}});
    }
    return {{"student", a.student},
            {"competency", a.competency},
            {"fraction", to_json(a.fraction)},
            {"evidence", std::move(evidence)}};
}

json to_json(const CohortStats& s)
{
    json j = {{"students", s.students},
              {"pages", s.pages},
              {"specs_total", s.specs_total},
              {"revisions_total", s.revisions_total}};
    j["specs_per_page_mean"] = s.pages == 0 ? json(nullptr) : to_json(s.specs_per_page_mean());
    j["revisions_per_page_mean"] =
        s.pages == 0 ? json(nullptr) : to_json(Fraction(s.revisions_total, s.pages));
    return j;
}

json trace_forward_document(std::string_view topic, const std::vector<TraceHit>& hits)
{
    json arr = json::array();
    for (const auto& h : hits)
        arr.push_back({{"competency", h.competency}, {"level", to_string(h.level)}});
    return {{"topic", topic}, {"competencies", std::move(arr)}};
}

json trace_backward_document(std::string_view competency, const BackwardTrace& trace)
{
    json topics = json::array();
    for (const auto& t : trace.topics)
        topics.push_back({{"topic", t.topic}, {"level", to_string(t.level)}});
    return {{"competency", competency},
            {"topics", std::move(topics)},
            {"courses", trace.courses},
            {"outcomes", trace.outcomes}};
}

json model_summary(const Model& model)
{
    const ModelData& m = model.data();
    std::size_t outcomes = 0, records = 0;
    for (const auto& c : m.courses)
        outcomes += c.outcomes.size();
    for (const auto& p : m.portfolios)
        records += p.records.size();
    return {{"blocks", m.blocks.size()},
            {"competencies", model.competency_count()},
            {"areas", model.area_count()},
            {"topics", model.topic_count()},
            {"skills", model.skill_count()},
            {"dispositions", model.disposition_count()},
            {"courses", m.courses.size()},
            {"outcomes", outcomes},
            {"objects", m.objects.size()},
            {"paths", m.paths.size()},
            {"pathways", m.pathways.size()},
            {"students", m.portfolios.size()},
            {"records", records},
            {"fingerprint", fingerprint(model)}};
}

json competency_list(const Model& model)
{
    json arr = json::array();
    for (const Competency* c : model.competencies()) {
        arr.push_back({{"id", c->id},
                       {"block", c->block},
                       {"statement", c->statement},
                       {"topics", c->topic_reqs.size()},
                       {"skills", c->skill_reqs.size()},
                       {"dispositions", c->disposition_reqs.size()}});
    }
    return {{"competencies", std::move(arr)}};
}

json to_json(const WhatIfDelta& delta)
{
    json creations = json::array();
    for (const auto& c : delta.creations)
        creations.push_back({{"course", c.course}, {"outcome", c.outcome}, {"statement", c.statement}});
    return {{"create", std::move(creations)}, {"remove", edits_json(delta.removals)}, {"add", edits_json(delta.additions)}};
}

WhatIfDelta delta_from_json(const json& doc)
{
    if (!doc.is_object())
        throw Error(codes::parse, "what-if delta must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "create" && key != "remove" && key != "add")
            throw Error(codes::parse, "unknown what-if section '" + key + "' (expected create, remove, add)");
    }
    WhatIfDelta delta;
    if (doc.contains("create")) {
        const json& arr = doc.at("create");
        if (!arr.is_array())
            throw Error(codes::parse, "/create: expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "/create/" + std::to_string(i);
            OutcomeCreation c;
            c.course = str_at(arr[i], "course", where);
            c.outcome = str_at(arr[i], "outcome", where);
            if (arr[i].contains("statement"))
                c.statement = str_at(arr[i], "statement", where);
            delta.creations.push_back(std::move(c));
        }
    }
    delta.removals = edits_from(doc, "remove");
    delta.additions = edits_from(doc, "add");
    return delta;
}

}  // namespace cforge::json
