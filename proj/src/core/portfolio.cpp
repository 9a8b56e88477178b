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

#include "cforge/portfolio.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace cforge {

Attainment attainment(const Graph& graph, const StudentPortfolio& portfolio, std::string_view competency)
{
    const Model& model = graph.model();
    const Competency* c = model.find_competency(competency);
    if (!c)
        throw Error(codes::unknown_id, "unknown competency '" + std::string(competency) + "'");

    Attainment result{portfolio.student, c->id, {}, {}};
    std::set<std::string> attained;
    for (const auto& record : portfolio.records) {
        for (const auto& spec : record.linked_specs) {
            const LearningOutcome* outcome = nullptr;
            if (spec.kind == LinkKind::competency) {
                if (spec.ref != c->id)
                    continue;
            } else if (outcome = model.find_outcome(spec.ref); !outcome) {
                continue;
            }
            for (const auto& req : c->topic_reqs) {
                if (outcome && std::none_of(outcome->targets.begin(), outcome->targets.end(),
                                            [&](const TopicRequirement& t) { return t.topic == req.topic; }))
                    continue;
                if (!bloom_geq(spec.level, req.level))
                    continue;
                attained.insert(req.topic);
                result.evidence.push_back({record.id, req.topic, req.level, spec.level, spec.kind, spec.ref});
            }
        }
    }
    std::sort(result.evidence.begin(), result.evidence.end(), [](const Evidence& a, const Evidence& b) {
        return std::tie(a.record, a.topic, a.via, a.ref, a.level) < std::tie(b.record, b.topic, b.via, b.ref, b.level);
    });
    result.fraction = Fraction(static_cast<std::int64_t>(attained.size()), static_cast<std::int64_t>(c->topic_reqs.size()));
    return result;
}

Attainment attainment(const Graph& graph, std::string_view student, std::string_view competency)
{
    const StudentPortfolio* p = graph.model().find_portfolio(student);
    if (!p)
        throw Error(codes::unknown_id, "unknown student '" + std::string(student) + "'");
    return attainment(graph, *p, competency);
}

Fraction CohortStats::specs_per_page_mean() const
{
    if (pages == 0)
        throw Error(codes::empty_cohort, "cohort has no achievement pages; mean specs per page is undefined");
    return Fraction(specs_total, pages);
}

CohortStats cohort_stats(std::span<const StudentPortfolio> portfolios)
{
    CohortStats stats;
    stats.students = static_cast<std::int64_t>(portfolios.size());
    for (const auto& p : portfolios) {
        stats.pages += static_cast<std::int64_t>(p.records.size());
        for (const auto& r : p.records) {
            stats.specs_total += static_cast<std::int64_t>(r.linked_specs.size());
            stats.revisions_total += r.revisions;
        }
    }
    return stats;
}

}  // namespace cforge
