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

#include "cforge/coverage.hpp"

#include "teaching_view.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <tuple>

namespace cforge {

std::string_view to_string(RequirementKind kind) noexcept
{
    switch (kind) {
    case RequirementKind::topic: return "topic";
    case RequirementKind::skill: return "skill";
    case RequirementKind::disposition: return "disposition";
    }
    return "?";
}

std::string_view to_string(GapReason reason) noexcept
{
    switch (reason) {
    case GapReason::untaught: return "UNTAUGHT";
    case GapReason::under_level: return "UNDER_LEVEL";
    case GapReason::skill_missing: return "SKILL_MISSING";
    case GapReason::disposition_missing: return "DISPOSITION_MISSING";
    }
    return "?";
}

namespace detail {

namespace {

const std::set<std::string>& empty_set()
{
    static const std::set<std::string> none;
    return none;
}

bool offer_less(const Offer& a, const Offer& b)
{
    return std::tie(a.course, a.outcome, a.level) < std::tie(b.course, b.outcome, b.level);
}

}  // namespace

GraphTeachingView::GraphTeachingView(const Graph& graph)
{
    for (NodeId n = 0; n < graph.nodes().size(); ++n) {
        const Node& node = graph.node(n);
        if (node.kind != NodeKind::outcome)
            continue;
        const auto owners = graph.in_edges(n, EdgeKind::course_has_outcome);
        const std::string& course = graph.node(owners.at(0)->from).id;
        const std::string outcome = node.id.substr(course.size() + 1);
        for (const Edge* e : graph.out_edges(n, EdgeKind::outcome_targets_topic))
            offers_[graph.node(e->to).id].push_back({course, outcome, *e->level});
        for (const Edge* e : graph.out_edges(n, EdgeKind::outcome_exercises_skill))
            skills_[graph.node(e->to).id].insert(course);
        for (const Edge* e : graph.out_edges(n, EdgeKind::outcome_exercises_disposition))
            dispositions_[graph.node(e->to).id].insert(course);
    }
    for (auto& [topic, list] : offers_)
        std::sort(list.begin(), list.end(), offer_less);
}

std::vector<Offer> GraphTeachingView::offers(const std::string& topic) const
{
    auto it = offers_.find(topic);
    return it == offers_.end() ? std::vector<Offer>{} : it->second;
}

std::set<std::string> GraphTeachingView::taught_topics() const
{
    std::set<std::string> out;
    for (const auto& [topic, list] : offers_) {
        if (!list.empty())
            out.insert(topic);
    }
    return out;
}

const std::set<std::string>& GraphTeachingView::skill_courses(const std::string& skill) const
{
    auto it = skills_.find(skill);
    return it == skills_.end() ? empty_set() : it->second;
}

const std::set<std::string>& GraphTeachingView::disposition_courses(const std::string& disposition) const
{
    auto it = dispositions_.find(disposition);
    return it == dispositions_.end() ? empty_set() : it->second;
}

CoverageReport compute_coverage(const Competency& competency, const TeachingView& view, CoverageOptions options)
{
    CoverageReport report;
    report.competency = competency.id;
    std::set<std::string> topic_courses;  // courses targeting any required topic
    std::int64_t satisfied = 0;
    for (const auto& req : competency.topic_reqs) {
        RequirementStatus status;
        status.kind = RequirementKind::topic;
        status.id = req.topic;
        status.required = req.level;
        for (const Offer& offer : view.offers(req.topic)) {
            topic_courses.insert(offer.course);
            // best = highest level, then smallest (course, outcome)
            if (!status.best_offer || rank(offer.level) > rank(status.best_offer->level) ||
                (offer.level == status.best_offer->level &&
                 std::tie(offer.course, offer.outcome) <
                     std::tie(status.best_offer->course, status.best_offer->outcome))) {
                status.best_offer = offer;
            }
        }
        status.satisfied = status.best_offer && bloom_geq(status.best_offer->level, req.level);
        satisfied += status.satisfied ? 1 : 0;
        report.statuses.push_back(std::move(status));
    }
    auto exercised = [&](const std::set<std::string>& courses) {
        if (!options.strict_fpk)
            return !courses.empty();
        return std::any_of(courses.begin(), courses.end(),
                           [&](const std::string& c) { return topic_courses.contains(c); });
    };
    for (const auto& skill : competency.skill_reqs) {
        RequirementStatus status{RequirementKind::skill, skill, std::nullopt, exercised(view.skill_courses(skill)), {}};
        report.skills_ok = report.skills_ok && status.satisfied;
        report.statuses.push_back(std::move(status));
    }
    for (const auto& d : competency.disposition_reqs) {
        RequirementStatus status{RequirementKind::disposition, d, std::nullopt,
                                 exercised(view.disposition_courses(d)), {}};
        report.dispositions_ok = report.dispositions_ok && status.satisfied;
        report.statuses.push_back(std::move(status));
    }
    report.topic_fraction = Fraction(satisfied, static_cast<std::int64_t>(competency.topic_reqs.size()));
    return report;
}

GapReport compute_gaps(const Model& model, const TeachingView& view, CoverageOptions options)
{
    GapReport gaps;
    std::set<std::string> required;
    for (const Competency* c : model.competencies()) {
        const CoverageReport report = compute_coverage(*c, view, options);
        CompetencyGaps entry{c->id, {}};
        for (const auto& status : report.statuses) {
            if (status.kind == RequirementKind::topic)
                required.insert(status.id);
            if (status.satisfied)
                continue;
            GapReason reason = GapReason::skill_missing;
            if (status.kind == RequirementKind::topic)
                reason = status.best_offer ? GapReason::under_level : GapReason::untaught;
            else if (status.kind == RequirementKind::disposition)
                reason = GapReason::disposition_missing;
            entry.gaps.push_back({status, reason});
        }
        if (!entry.gaps.empty())
            gaps.competencies.push_back(std::move(entry));
    }
    const std::set<std::string> taught = view.taught_topics();
    std::set_difference(taught.begin(), taught.end(), required.begin(), required.end(),
                        std::back_inserter(gaps.orphan_topics));
    std::set_difference(required.begin(), required.end(), taught.begin(), taught.end(),
                        std::back_inserter(gaps.untaught_topics));
    return gaps;
}

}  // namespace detail

namespace {

const Competency& require_competency(const Graph& graph, std::string_view id)
{
    const Competency* c = graph.model().find_competency(id);
    if (!c)
        throw Error(codes::unknown_id, "unknown competency '" + std::string(id) + "'");
    return *c;
}

}  // namespace

CoverageReport competency_coverage(const Graph& graph, std::string_view competency, CoverageOptions options)
{
    const Competency& c = require_competency(graph, competency);
    return detail::compute_coverage(c, detail::GraphTeachingView(graph), options);
}

CoverageMatrix coverage_matrix(const Graph& graph)
{
    CoverageMatrix matrix;
    const Model& model = graph.model();
    for (const auto& course : model.data().courses)
        matrix.courses.push_back(course.id);
    const detail::GraphTeachingView view(graph);
    for (const Competency* c : model.competencies()) {
        matrix.competencies.push_back(c->id);
        std::vector<int> row(matrix.courses.size(), 0);
        for (const auto& req : c->topic_reqs) {
            std::set<std::string> satisfying;
            for (const Offer& offer : view.offers(req.topic)) {
                if (bloom_geq(offer.level, req.level))
                    satisfying.insert(offer.course);
            }
            for (std::size_t j = 0; j < matrix.courses.size(); ++j)
                row[j] += satisfying.contains(matrix.courses[j]) ? 1 : 0;
        }
        matrix.cells.push_back(std::move(row));
    }
    return matrix;
}

GapReport gap_report(const Graph& graph, CoverageOptions options)
{
    return detail::compute_gaps(graph.model(), detail::GraphTeachingView(graph), options);
}

PathwayProfile pathway_profile(const Graph& graph, std::string_view pathway, CoverageOptions options)
{
    const Model& model = graph.model();
    const Pathway* p = model.find_pathway(pathway);
    if (!p)
        throw Error(codes::unknown_id, "unknown pathway '" + std::string(pathway) + "'");
    const detail::GraphTeachingView view(graph);
    PathwayProfile profile;
    profile.pathway = p->id;
    Fraction other_sum;
    std::int64_t other_count = 0;
    for (const auto& block : model.data().blocks) {
        Fraction sum;
        for (const auto& c : block.competencies)
            sum = sum + detail::compute_coverage(c, view, options).topic_fraction;
        const Fraction mean = sum / static_cast<std::int64_t>(block.competencies.size());
        const bool emphasized = p->emphasized_blocks.contains(block.id);
        profile.blocks.push_back({block.id, mean, emphasized});
        if (!emphasized) {
            other_sum = other_sum + mean;
            ++other_count;
        }
    }
    if (other_count > 0) {
        const Fraction baseline = other_sum / other_count;
        for (const auto& b : profile.blocks) {
            if (b.emphasized && b.mean_topic_fraction < baseline) {
                profile.warnings.push_back(Diagnostic::warning(
                    codes::emphasis_underserved,
                    "pathway '" + p->id + "' emphasizes block " + std::to_string(b.block) + " but its mean coverage " +
                        b.mean_topic_fraction.to_decimal() + " is below the non-emphasized mean " +
                        baseline.to_decimal()));
            }
        }
    }
    return profile;
}

}  // namespace cforge
