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
#include <map>
#include <set>
#include <tuple>

namespace cforge {

namespace {

using TargetKey = std::tuple<std::string, std::string, std::string, BloomLevel>;  // course, outcome, topic, level

/// A delta checked against a model: which offers disappear, which appear.
struct ResolvedDelta {
    std::set<TargetKey> removed;
    std::map<std::string, std::vector<Offer>> added;  // by topic
};

ResolvedDelta resolve(const Model& model, const WhatIfDelta& delta)
{
    Diagnostics diags;
    auto fail = [&](std::string_view code, std::string msg, const SourceSpan& span) {
        diags.push_back(Diagnostic::error(code, std::move(msg), span));
    };

    // current targets of every outcome the delta touches: topic -> level
    std::map<std::string, std::map<std::string, BloomLevel>> touched;
    auto current = [&](const std::string& course, const std::string& outcome,
                       const SourceSpan& span) -> std::map<std::string, BloomLevel>* {
        const std::string ref = outcome_ref(course, outcome);
        if (auto it = touched.find(ref); it != touched.end())
            return &it->second;
        if (!model.find_course(course)) {
            fail(codes::delta_unresolved, "unknown course '" + course + "'", span);
            return nullptr;
        }
        const LearningOutcome* o = model.find_outcome(ref);
        if (!o) {
            fail(codes::delta_unresolved, "unknown outcome '" + ref + "'", span);
            return nullptr;
        }
        auto& targets = touched[ref];
        for (const auto& t : o->targets)
            targets.emplace(t.topic, t.level);
        return &targets;
    };

    for (const auto& c : delta.creations) {
        const std::string ref = outcome_ref(c.course, c.outcome);
        if (!model.find_course(c.course)) {
            fail(codes::delta_unresolved, "unknown course '" + c.course + "'", c.span);
        } else if (c.outcome.empty() || c.outcome.find('/') != std::string::npos) {
            fail(codes::bad_value, "invalid outcome id '" + c.outcome + "'", c.span);
        } else if (model.find_outcome(ref) || touched.contains(ref)) {
            fail(codes::dup_id, "outcome '" + ref + "' already exists", c.span);
        } else {
            touched[ref];
        }
    }

    ResolvedDelta resolved;
    for (const auto& e : delta.removals) {
        auto* targets = current(e.course, e.outcome, e.span);
        if (!targets)
            continue;
        auto it = targets->find(e.topic);
        if (it == targets->end() || it->second != e.level) {
            fail(codes::delta_unresolved,
                 "outcome '" + outcome_ref(e.course, e.outcome) + "' does not target '" + e.topic + "' at " +
                     std::string(to_string(e.level)),
                 e.span);
            continue;
        }
        targets->erase(it);
        resolved.removed.emplace(e.course, e.outcome, e.topic, e.level);
    }
    for (const auto& e : delta.additions) {
        auto* targets = current(e.course, e.outcome, e.span);
        if (!targets)
            continue;
        if (!model.find_topic(e.topic)) {
            fail(codes::delta_unresolved, "unknown topic '" + e.topic + "'", e.span);
            continue;
        }
        if (!targets->emplace(e.topic, e.level).second) {
            fail(codes::dup_topic, "outcome '" + outcome_ref(e.course, e.outcome) + "' already targets '" + e.topic + "'",
                 e.span);
            continue;
        }
        resolved.added[e.topic].push_back({e.course, e.outcome, e.level});
    }
    for (const auto& [ref, targets] : touched) {
        if (targets.empty())
            fail(codes::empty_reqs, "outcome '" + ref + "' would be left without targets", SourceSpan{});
    }
    if (!diags.empty())
        throw Error::from(std::move(diags));
    return resolved;
}

class OverlayTeachingView final : public detail::TeachingView {
public:
    OverlayTeachingView(const detail::TeachingView& base, const ResolvedDelta& delta) : base_(base), delta_(delta) {}

    std::vector<Offer> offers(const std::string& topic) const override
    {
        std::vector<Offer> out;
        for (auto& offer : base_.offers(topic)) {
            if (!delta_.removed.contains({offer.course, offer.outcome, topic, offer.level}))
                out.push_back(std::move(offer));
        }
        if (auto it = delta_.added.find(topic); it != delta_.added.end())
            out.insert(out.end(), it->second.begin(), it->second.end());
        std::sort(out.begin(), out.end(), [](const Offer& a, const Offer& b) {
            return std::tie(a.course, a.outcome, a.level) < std::tie(b.course, b.outcome, b.level);
        });
        return out;
    }

    std::set<std::string> taught_topics() const override
    {
        std::set<std::string> taught = base_.taught_topics();
        for (const auto& key : delta_.removed) {
            const std::string& topic = std::get<2>(key);
            if (offers(topic).empty())
                taught.erase(topic);
        }
        for (const auto& [topic, list] : delta_.added)
            taught.insert(topic);
        return taught;
    }

    const std::set<std::string>& skill_courses(const std::string& skill) const override
    {
        return base_.skill_courses(skill);
    }

    const std::set<std::string>& disposition_courses(const std::string& disposition) const override
    {
        return base_.disposition_courses(disposition);
    }

private:
    const detail::TeachingView& base_;
    const ResolvedDelta& delta_;
};

}  // namespace

WhatIfResult whatif(const Graph& graph, const WhatIfDelta& delta, CoverageOptions options)
{
    const Model& model = graph.model();
    const ResolvedDelta resolved = resolve(model, delta);
    const detail::GraphTeachingView base(graph);
    const OverlayTeachingView overlay(base, resolved);

    WhatIfResult result;
    result.before = detail::compute_gaps(model, base, options);
    result.after = detail::compute_gaps(model, overlay, options);
    for (const Competency* c : model.competencies()) {
        const Fraction before = detail::compute_coverage(*c, base, options).topic_fraction;
        const Fraction after = detail::compute_coverage(*c, overlay, options).topic_fraction;
        if (before != after)
            result.changed.push_back({c->id, before, after});
    }
    return result;
}

ModelData materialize(const Model& model, const WhatIfDelta& delta)
{
    resolve(model, delta);
    ModelData data = model.data();
    auto find_course = [&](const std::string& id) -> Course& {
        return *std::find_if(data.courses.begin(), data.courses.end(), [&](const Course& c) { return c.id == id; });
    };
    auto find_outcome = [&](const std::string& course, const std::string& id) -> LearningOutcome& {
        auto& outcomes = find_course(course).outcomes;
        return *std::find_if(outcomes.begin(), outcomes.end(), [&](const LearningOutcome& o) { return o.id == id; });
    };
    for (const auto& c : delta.creations) {
        LearningOutcome o;
        o.id = c.outcome;
        o.statement = c.statement;
        find_course(c.course).outcomes.push_back(std::move(o));
    }
    for (const auto& e : delta.removals) {
        auto& targets = find_outcome(e.course, e.outcome).targets;
        std::erase(targets, TopicRequirement{e.topic, e.level});
    }
    for (const auto& e : delta.additions)
        find_outcome(e.course, e.outcome).targets.push_back({e.topic, e.level});
    return data;
}

}  // namespace cforge
