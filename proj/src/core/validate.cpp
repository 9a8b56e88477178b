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

#include "cforge/model.hpp"

#include "model_index.hpp"
#include "span_keys.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace cforge {

namespace {

bool valid_iso_date(std::string_view s)
{
    if (s.size() != 10 || s[4] != '-' || s[7] != '-')
        return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (s[i] < '0' || s[i] > '9')
            return false;
    }
    const int year = std::stoi(std::string(s.substr(0, 4)));
    const int month = std::stoi(std::string(s.substr(5, 2)));
    const int day = std::stoi(std::string(s.substr(8, 2)));
    if (month < 1 || month > 12 || day < 1)
        return false;
    static constexpr int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    const int limit = month == 2 && leap ? 29 : days[month - 1];
    return day <= limit;
}

class Validator {
public:
    explicit Validator(const Draft& draft) : draft_(draft) {}

    ValidationResult run();

private:
    SourceSpan span(const std::string& key) const
    {
        std::string k = key;
        for (;;) {
            if (auto it = draft_.spans.find(k); it != draft_.spans.end())
                return it->second;
            const auto cut = k.rfind('/');
            if (cut == std::string::npos) {
                auto root = draft_.spans.find("");
                return root == draft_.spans.end() ? SourceSpan{} : root->second;
            }
            k.resize(cut);
        }
    }

    void error(std::string_view code, std::string message, const std::string& key)
    {
        diags_.push_back(Diagnostic::error(code, std::move(message), span(key)));
    }

    /// Records `id` in `seen`; reports E_DUP_ID on a repeat.
    template <class T>
    void unique(std::set<T>& seen, const T& id, std::string_view what, const std::string& key)
    {
        if (!seen.insert(id).second) {
            std::string shown;
            if constexpr (std::is_same_v<T, int>)
                shown = std::to_string(id);
            else
                shown = id;
            error(codes::dup_id, std::string(what) + " '" + shown + "' is declared more than once", key);
        }
    }

    void check_catalogs();
    void check_competencies();
    void check_requirements(const std::vector<TopicRequirement>& reqs, const std::string& owner, std::string_view what);
    void check_refs(const std::set<std::string>& skills, const std::set<std::string>& dispositions,
                    const std::string& owner);
    void check_courses();
    void check_objects_and_paths();
    void check_pathways();
    void check_portfolios();
    void canonicalize();

    const Draft& draft_;
    ModelData data_;
    Diagnostics diags_;

    std::set<std::string> topics_, skills_, dispositions_, outcomes_, objects_, paths_;
    std::set<int> blocks_;
    std::set<std::string> competencies_;
};

void Validator::check_catalogs()
{
    std::set<std::string> areas;
    for (const auto& catalog : data_.catalogs) {
        for (const auto& area : catalog.areas) {
            const auto key = keys::area(area.id);
            unique(areas, area.id, "knowledge area", key);
            if (area.topics.empty())
                error(codes::bad_value, "knowledge area '" + area.id + "' has no topics", key);
            for (const auto& topic : area.topics) {
                const auto tkey = keys::topic(topic.id);
                const std::string prefix = area.id + "/";
                if (topic.id.size() <= prefix.size() || topic.id.compare(0, prefix.size(), prefix) != 0) {
                    error(codes::bad_value, "topic id '" + topic.id + "' must have the form '" + prefix + "<slug>'",
                          tkey);
                }
                unique(topics_, topic.id, "topic", tkey);
            }
        }
        for (const auto& s : catalog.skills)
            unique(skills_, s.id, "skill", keys::skill(s.id));
        for (const auto& d : catalog.dispositions)
            unique(dispositions_, d.id, "disposition", keys::disposition(d.id));
    }
}

void Validator::check_requirements(const std::vector<TopicRequirement>& reqs, const std::string& owner,
                                   std::string_view what)
{
    if (reqs.empty()) {
        error(codes::empty_reqs, std::string(what) + " has no topic requirements", owner);
        return;
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < reqs.size(); ++i) {
        const auto key = keys::requirement(owner, i);
        if (!topics_.contains(reqs[i].topic))
            error(codes::dangling_ref, "unknown topic '" + reqs[i].topic + "'", key);
        if (!seen.insert(reqs[i].topic).second)
            error(codes::dup_topic, "topic '" + reqs[i].topic + "' is listed more than once", key);
    }
}

void Validator::check_refs(const std::set<std::string>& skills, const std::set<std::string>& dispositions,
                           const std::string& owner)
{
    for (const auto& s : skills) {
        if (!skills_.contains(s))
            error(codes::dangling_ref, "unknown skill '" + s + "'", keys::owner_skill(owner, s));
    }
    for (const auto& d : dispositions) {
        if (!dispositions_.contains(d))
            error(codes::dangling_ref, "unknown disposition '" + d + "'", keys::owner_disposition(owner, d));
    }
}

void Validator::check_competencies()
{
    for (const auto& block : data_.blocks) {
        unique(blocks_, block.id, "block", keys::block(block.id));
        if (block.id < 1)
            error(codes::bad_value, "block id must be a positive integer", keys::block(block.id));
        if (!block.competencies.empty())
            error(codes::bad_value, "draft block carries nested competencies", keys::block(block.id));
    }

    std::map<int, std::vector<Competency>> by_block;
    for (const auto& c : draft_.competencies) {
        const auto key = keys::competency(c.id);
        unique(competencies_, c.id, "competency", key);
        if (!blocks_.contains(c.block)) {
            error(codes::dangling_ref, "competency '" + c.id + "' refers to unknown block " + std::to_string(c.block),
                  keys::competency_block(c.id));
        } else {
            by_block[c.block].push_back(c);
        }
        const auto dot = c.id.find('.');
        if (dot == std::string::npos || c.id.substr(0, dot) != std::to_string(c.block) || dot + 1 == c.id.size()) {
            error(codes::bad_block,
                  "competency id '" + c.id + "' does not match its block " + std::to_string(c.block) +
                      " (expected '" + std::to_string(c.block) + ".<n>')",
                  key);
        }
        check_requirements(c.topic_reqs, key, "competency '" + c.id + "'");
        check_refs(c.skill_reqs, c.disposition_reqs, key);
    }
    for (auto& block : data_.blocks) {
        auto it = by_block.find(block.id);
        if (it == by_block.end()) {
            error(codes::bad_value, "block " + std::to_string(block.id) + " has no competencies",
                  keys::block(block.id));
            continue;
        }
        block.competencies = std::move(it->second);
        by_block.erase(it);
    }
}

void Validator::check_courses()
{
    std::set<std::string> ids;
    for (const auto& course : data_.courses) {
        const auto key = keys::course(course.id);
        unique(ids, course.id, "course", key);
        if (course.id.empty() || course.id.find('/') != std::string::npos)
            error(codes::bad_value, "course id '" + course.id + "' must be non-empty and contain no '/'", key);
        if (course.year < 1 || course.year > 5)
            error(codes::bad_value, "course '" + course.id + "' year must be within 1..5", key);
        if (!(course.ects >= 0.0) || !std::isfinite(course.ects))
            error(codes::bad_value, "course '" + course.id + "' ECTS must be a non-negative number", key);
        std::set<std::string> local;
        for (const auto& o : course.outcomes) {
            const auto okey = keys::outcome(course.id, o.id);
            unique(local, o.id, "outcome", okey);
            if (o.id.empty() || o.id.find('/') != std::string::npos)
                error(codes::bad_value, "outcome id '" + o.id + "' must be non-empty and contain no '/'", okey);
            outcomes_.insert(outcome_ref(course.id, o.id));
            check_requirements(o.targets, okey, "outcome '" + outcome_ref(course.id, o.id) + "'");
            check_refs(o.skills_exercised, o.dispositions_exercised, okey);
        }
    }
}

void Validator::check_objects_and_paths()
{
    for (const auto& object : data_.objects) {
        const auto key = keys::object(object.id);
        unique(objects_, object.id, "learning object", key);
        if (object.assessments.empty())
            error(codes::bad_value, "learning object '" + object.id + "' has no assessment", key);
        std::set<std::string> local;
        for (const auto& a : object.assessments) {
            const auto akey = keys::assessment(object.id, a.id);
            unique(local, a.id, "assessment", akey);
            if (a.outcome_refs.empty())
                error(codes::bad_value, "assessment '" + a.id + "' assesses no outcome", akey);
            for (const auto& ref : a.outcome_refs) {
                if (!outcomes_.contains(ref))
                    error(codes::dangling_ref, "unknown outcome '" + ref + "'", keys::assessment_ref(akey, ref));
            }
        }
    }
    for (const auto& path : data_.paths) {
        const auto key = keys::path(path.id);
        unique(paths_, path.id, "learning path", key);
        if (path.stages.empty())
            error(codes::bad_value, "learning path '" + path.id + "' has no stages", key);
        std::set<std::string> seen;
        for (const auto& stage : path.stages) {
            if (stage.empty())
                error(codes::bad_value, "learning path '" + path.id + "' has an empty stage", key);
            for (const auto& oid : stage) {
                const auto okey = keys::path_object(path.id, oid);
                if (!objects_.contains(oid))
                    error(codes::dangling_ref, "unknown learning object '" + oid + "'", okey);
                if (!seen.insert(oid).second)
                    error(codes::dup_id, "learning object '" + oid + "' appears twice in path '" + path.id + "'",
                          okey);
            }
        }
    }
    for (const auto& course : data_.courses) {
        for (const auto& pid : course.paths) {
            if (!paths_.contains(pid))
                error(codes::dangling_ref, "unknown learning path '" + pid + "'", keys::course_path(course.id, pid));
        }
    }
}

void Validator::check_pathways()
{
    std::set<std::string> ids;
    for (const auto& p : data_.pathways) {
        const auto key = keys::pathway(p.id);
        unique(ids, p.id, "pathway", key);
        if (p.emphasized_blocks.empty())
            error(codes::bad_value, "pathway '" + p.id + "' emphasizes no block", key);
        for (int b : p.emphasized_blocks) {
            if (!blocks_.contains(b))
                error(codes::dangling_ref, "pathway '" + p.id + "' emphasizes unknown block " + std::to_string(b),
                      keys::pathway_block(p.id, b));
        }
    }
}

void Validator::check_portfolios()
{
    std::set<std::string> students;
    for (const auto& p : data_.portfolios) {
        unique(students, p.student, "portfolio", keys::portfolio(p.student));
        std::set<std::string> records;
        for (const auto& r : p.records) {
            const auto key = keys::achievement(p.student, r.id);
            unique(records, r.id, "achievement", key);
            if (r.student != p.student)
                error(codes::bad_value, "achievement '" + r.id + "' belongs to student '" + r.student + "'", key);
            if (r.revisions < 1)
                error(codes::bad_value, "achievement '" + r.id + "' must have at least one revision", key);
            if (!valid_iso_date(r.created))
                error(codes::bad_value, "achievement '" + r.id + "' has invalid date '" + r.created + "'", key);
            for (std::size_t i = 0; i < r.linked_specs.size(); ++i) {
                const auto& spec = r.linked_specs[i];
                const bool known = spec.kind == LinkKind::competency ? competencies_.contains(spec.ref)
                                                                     : outcomes_.contains(spec.ref);
                if (!known) {
                    error(codes::dangling_ref,
                          std::string("unknown ") + (spec.kind == LinkKind::competency ? "competency" : "outcome") +
                              " '" + spec.ref + "'",
                          keys::link(key, i));
                }
            }
        }
    }
}

void Validator::canonicalize()
{
    auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
    auto by_topic = [](const TopicRequirement& a, const TopicRequirement& b) { return a.topic < b.topic; };

    std::sort(data_.catalogs.begin(), data_.catalogs.end(),
              [](const Catalog& a, const Catalog& b) { return std::tie(a.name, a.version) < std::tie(b.name, b.version); });
    for (auto& catalog : data_.catalogs) {
        std::sort(catalog.areas.begin(), catalog.areas.end(), by_id);
        for (auto& area : catalog.areas)
            std::sort(area.topics.begin(), area.topics.end(), by_id);
        std::sort(catalog.skills.begin(), catalog.skills.end(), by_id);
        std::sort(catalog.dispositions.begin(), catalog.dispositions.end(), by_id);
    }
    std::sort(data_.blocks.begin(), data_.blocks.end(), by_id);
    for (auto& block : data_.blocks) {
        std::sort(block.competencies.begin(), block.competencies.end(),
                  [](const Competency& a, const Competency& b) { return competency_id_less(a.id, b.id); });
        for (auto& c : block.competencies)
            std::sort(c.topic_reqs.begin(), c.topic_reqs.end(), by_topic);
    }
    std::sort(data_.courses.begin(), data_.courses.end(), by_id);
    for (auto& course : data_.courses) {
        std::sort(course.outcomes.begin(), course.outcomes.end(), by_id);
        for (auto& o : course.outcomes)
            std::sort(o.targets.begin(), o.targets.end(), by_topic);
        std::sort(course.paths.begin(), course.paths.end());
        course.paths.erase(std::unique(course.paths.begin(), course.paths.end()), course.paths.end());
    }
    std::sort(data_.objects.begin(), data_.objects.end(), by_id);
    for (auto& object : data_.objects)
        std::sort(object.assessments.begin(), object.assessments.end(), by_id);
    std::sort(data_.paths.begin(), data_.paths.end(), by_id);
    std::sort(data_.pathways.begin(), data_.pathways.end(), by_id);
    std::sort(data_.portfolios.begin(), data_.portfolios.end(),
              [](const StudentPortfolio& a, const StudentPortfolio& b) { return a.student < b.student; });
    for (auto& p : data_.portfolios) {
        std::sort(p.records.begin(), p.records.end(), by_id);
        for (auto& r : p.records)
            std::sort(r.linked_specs.begin(), r.linked_specs.end());
    }
}

ValidationResult Validator::run()
{
    data_ = draft_.data;
    check_catalogs();
    check_competencies();
    check_courses();
    check_objects_and_paths();
    check_pathways();
    check_portfolios();

    ValidationResult result;
    result.diagnostics = draft_.warnings;
    result.diagnostics.insert(result.diagnostics.end(), diags_.begin(), diags_.end());
    std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.span.file, a.span.line_start, a.span.col_start) <
               std::tie(b.span.file, b.span.line_start, b.span.col_start);
    });
    if (!has_errors(diags_)) {
        canonicalize();
        result.model = ModelBuilder::make(std::move(data_));
    }
    return result;
}

}  // namespace

ValidationResult validate(const Draft& draft) { return Validator(draft).run(); }

ValidationResult validate(const ModelData& data) { return validate(to_draft(data)); }

}  // namespace cforge
