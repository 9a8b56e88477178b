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

// Brute-force reference implementation of the coverage analyses. It works on
// the plain model data with nested loops over (requirement, course, outcome,
// target) and shares no code with the engine beyond the value types, so the
// engine's graph and index machinery is checked against the definitions.

#include "cforge/coverage.hpp"
#include "cforge/model.hpp"

#include <set>
#include <string>
#include <vector>

namespace cforge::oracle {

inline bool offer_beats(const Offer& a, const Offer& b)
{
    if (rank(a.level) != rank(b.level))
        return rank(a.level) > rank(b.level);
    if (a.course != b.course)
        return a.course < b.course;
    return a.outcome < b.outcome;
}

inline bool satisfied_by(const ModelData& m, const TopicRequirement& req, const std::string* only_course = nullptr)
{
    for (const auto& course : m.courses) {
        if (only_course && course.id != *only_course)
            continue;
        for (const auto& outcome : course.outcomes)
            for (const auto& target : outcome.targets)
                if (target.topic == req.topic && rank(target.level) >= rank(req.level))
                    return true;
    }
    return false;
}

inline bool course_targets_any(const Course& course, const Competency& c)
{
    for (const auto& outcome : course.outcomes)
        for (const auto& target : outcome.targets)
            for (const auto& req : c.topic_reqs)
                if (target.topic == req.topic)
                    return true;
    return false;
}

/// Is `item` exercised by some outcome (of a course sharing a topic with
/// `c`, when strict)?
inline bool exercised(const ModelData& m, const Competency& c, const std::string& item, bool skill, bool strict)
{
    for (const auto& course : m.courses) {
        if (strict && !course_targets_any(course, c))
            continue;
        for (const auto& outcome : course.outcomes) {
            const auto& pool = skill ? outcome.skills_exercised : outcome.dispositions_exercised;
            if (pool.count(item) != 0)
                return true;
        }
    }
    return false;
}

inline CoverageReport coverage(const ModelData& m, const Competency& c, bool strict = false)
{
    CoverageReport r;
    r.competency = c.id;
    std::int64_t met = 0;
    for (const auto& req : c.topic_reqs) {
        RequirementStatus s;
        s.kind = RequirementKind::topic;
        s.id = req.topic;
        s.required = req.level;
        for (const auto& course : m.courses)
            for (const auto& outcome : course.outcomes)
                for (const auto& target : outcome.targets) {
                    if (target.topic != req.topic)
                        continue;
                    const Offer candidate{course.id, outcome.id, target.level};
                    if (!s.best_offer || offer_beats(candidate, *s.best_offer))
                        s.best_offer = candidate;
                }
        s.satisfied = satisfied_by(m, req);
        met += s.satisfied ? 1 : 0;
        r.statuses.push_back(s);
    }
    for (const auto& skill : c.skill_reqs) {
        const bool ok = exercised(m, c, skill, true, strict);
        r.skills_ok = r.skills_ok && ok;
        r.statuses.push_back({RequirementKind::skill, skill, std::nullopt, ok, std::nullopt});
    }
    for (const auto& d : c.disposition_reqs) {
        const bool ok = exercised(m, c, d, false, strict);
        r.dispositions_ok = r.dispositions_ok && ok;
        r.statuses.push_back({RequirementKind::disposition, d, std::nullopt, ok, std::nullopt});
    }
    r.topic_fraction = Fraction(met, static_cast<std::int64_t>(c.topic_reqs.size()));
    return r;
}

inline CoverageMatrix matrix(const ModelData& m)
{
    CoverageMatrix out;
    for (const auto& course : m.courses)
        out.courses.push_back(course.id);
    for (const auto& block : m.blocks)
        for (const auto& c : block.competencies) {
            out.competencies.push_back(c.id);
            std::vector<int> row;
            for (const auto& course : m.courses) {
                int n = 0;
                for (const auto& req : c.topic_reqs)
                    n += satisfied_by(m, req, &course.id) ? 1 : 0;
                row.push_back(n);
            }
            out.cells.push_back(row);
        }
    return out;
}

inline GapReport gaps(const ModelData& m, bool strict = false)
{
    GapReport out;
    std::set<std::string> required, taught;
    for (const auto& block : m.blocks)
        for (const auto& c : block.competencies) {
            for (const auto& req : c.topic_reqs)
                required.insert(req.topic);
            CompetencyGaps entry{c.id, {}};
            for (const auto& s : coverage(m, c, strict).statuses) {
                if (s.satisfied)
                    continue;
                GapReason why = GapReason::skill_missing;
                if (s.kind == RequirementKind::disposition)
                    why = GapReason::disposition_missing;
                if (s.kind == RequirementKind::topic)
                    why = s.best_offer ? GapReason::under_level : GapReason::untaught;
                entry.gaps.push_back({s, why});
            }
            if (!entry.gaps.empty())
                out.competencies.push_back(entry);
        }
    for (const auto& course : m.courses)
        for (const auto& outcome : course.outcomes)
            for (const auto& target : outcome.targets)
                taught.insert(target.topic);
    for (const auto& t : taught)
        if (required.count(t) == 0)
            out.orphan_topics.push_back(t);
    for (const auto& t : required)
        if (taught.count(t) == 0)
            out.untaught_topics.push_back(t);
    return out;
}

}  // namespace cforge::oracle
