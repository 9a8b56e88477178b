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
#include "cforge/graph.hpp"
#include "cforge/portfolio.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace cforge;
using namespace cforge::testing;

namespace {

/// 1.1 requires t1@B1, t2@A2, t3@C1; only t1 is taught high enough.
const char* kOneThird = R"(
competency "1.1" in block 1 {
  requires a/t1 @ B1
  requires a/t2 @ A2
  requires a/t3 @ C1
}
course c "C" {
  year 1
  outcome o { targets a/t1 @ B2 targets a/t2 @ A1 }
  outcome o2 { targets a/t4 @ A1 }
}
)";

Graph graph_of(const std::string& body) { return build_graph(micro(body)); }

const RequirementStatus& status_of(const CoverageReport& r, std::string_view topic)
{
    auto it = std::find_if(r.statuses.begin(), r.statuses.end(), [&](const RequirementStatus& s) { return s.id == topic; });
    REQUIRE(it != r.statuses.end());
    return *it;
}

WhatIfDelta single_edit(bool add, std::string course, std::string outcome, std::string topic, BloomLevel level)
{
    WhatIfDelta d;
    (add ? d.additions : d.removals).push_back({std::move(course), std::move(outcome), std::move(topic), level, {}});
    return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

TEST_CASE("the empty model has an empty graph")
{
    const Graph g = build_graph(Model{});
    CHECK(g.nodes().empty());
    CHECK(g.edges().empty());
}

TEST_CASE("one competency with three topics has three requirement edges")
{
    const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ A1 requires a/t2 @ B1 requires a/t3 @ C2 }\n");
    CHECK(g.edge_count(EdgeKind::competency_requires_topic) == 3);
    const auto c = g.find(NodeKind::competency, "1.1");
    REQUIRE(c.has_value());
    const auto out = g.out_edges(*c, EdgeKind::competency_requires_topic);
    REQUIRE(out.size() == 3);
    for (const Edge* e : out) {
        CHECK(e->level.has_value());
        CHECK(g.node(e->to).kind == NodeKind::topic);
    }
}

TEST_CASE("fixture graph conserves every declared element and relation")
{
    const Model& m = fixture_model();
    const Graph& g = fixture_graph();
    const ModelData& d = m.data();

    std::size_t reqs = 0, skills = 0, dispositions = 0, outcomes = 0, targets = 0, exercised_s = 0, exercised_d = 0;
    for (const Competency* c : m.competencies()) {
        reqs += c->topic_reqs.size();
        skills += c->skill_reqs.size();
        dispositions += c->disposition_reqs.size();
    }
    for (const auto& course : d.courses)
        for (const auto& o : course.outcomes) {
            ++outcomes;
            targets += o.targets.size();
            exercised_s += o.skills_exercised.size();
            exercised_d += o.dispositions_exercised.size();
        }
    std::size_t stage_links = 0, assessed = 0, emphasized = 0;
    for (const auto& p : d.paths)
        for (const auto& s : p.stages)
            stage_links += s.size();
    for (const auto& o : d.objects) {
        std::set<std::string> refs;
        for (const auto& a : o.assessments)
            refs.insert(a.outcome_refs.begin(), a.outcome_refs.end());
        assessed += refs.size();
    }
    for (const auto& p : d.pathways)
        emphasized += p.emphasized_blocks.size();

    CHECK(g.edge_count(EdgeKind::competency_requires_topic) == reqs);
    CHECK(g.edge_count(EdgeKind::competency_requires_skill) == skills);
    CHECK(g.edge_count(EdgeKind::competency_requires_disposition) == dispositions);
    CHECK(g.edge_count(EdgeKind::course_has_outcome) == outcomes);
    CHECK(g.edge_count(EdgeKind::outcome_targets_topic) == targets);
    CHECK(g.edge_count(EdgeKind::outcome_exercises_skill) == exercised_s);
    CHECK(g.edge_count(EdgeKind::outcome_exercises_disposition) == exercised_d);
    CHECK(g.edge_count(EdgeKind::path_stage_object) == stage_links);
    CHECK(g.edge_count(EdgeKind::object_assesses_outcome) == assessed);
    CHECK(g.edge_count(EdgeKind::block_contains_competency) == 23);
    CHECK(g.edge_count(EdgeKind::pathway_emphasizes_block) == emphasized);

    std::size_t total = 0;
    for (int k = 0; k < kEdgeKindCount; ++k)
        total += g.edge_count(static_cast<EdgeKind>(k));
    CHECK(total == g.edges().size());

    const std::size_t expected_nodes = d.blocks.size() + 23 + m.area_count() + m.topic_count() + m.skill_count() +
                                       m.disposition_count() + d.courses.size() + outcomes + d.paths.size() +
                                       d.objects.size() + d.pathways.size();
    CHECK(g.nodes().size() == expected_nodes);

    for (const Edge& e : g.edges()) {
        const bool leveled = e.kind == EdgeKind::competency_requires_topic || e.kind == EdgeKind::outcome_targets_topic;
        CHECK(e.level.has_value() == leveled);
        CHECK(e.stage.has_value() == (e.kind == EdgeKind::path_stage_object));
    }
    CHECK(build_graph(m) == g);
}

TEST_CASE("forward trace lists requiring competencies with their levels")
{
    SUBCASE("fixture")
    {
        const auto hits = trace_forward(fixture_graph(), "sw-design/arch-patterns");
        REQUIRE(hits.size() == 2);
        CHECK(hits[0].competency == "1.1");
        CHECK(hits[0].level == BloomLevel::B2);
        CHECK(hits[1].competency == "4.3");
        CHECK(hits[1].level == BloomLevel::C1);
    }
    SUBCASE("two competencies on one topic")
    {
        const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n"
                                 "competency \"1.2\" in block 1 { requires a/t1 @ C1 }\n");
        const auto hits = trace_forward(g, "a/t1");
        REQUIRE(hits.size() == 2);
        CHECK(hits[0].level == BloomLevel::B1);
        CHECK(hits[1].level == BloomLevel::C1);
        CHECK(trace_forward(g, "a/t2").empty());
    }
    SUBCASE("unknown topic")
    {
        CHECK_THROWS_AS(trace_forward(fixture_graph(), "nope/none"), Error);
    }
}

TEST_CASE("backward trace lists the courses teaching required topics")
{
    SUBCASE("fixture")
    {
        const BackwardTrace t = trace_backward(fixture_graph(), "1.1");
        CHECK(std::find(t.courses.begin(), t.courses.end(), "course-sw") != t.courses.end());
        CHECK(t.topics == fixture_model().find_competency("1.1")->topic_reqs);
        CHECK(std::is_sorted(t.courses.begin(), t.courses.end()));
        CHECK(std::is_sorted(t.outcomes.begin(), t.outcomes.end()));
    }
    SUBCASE("untaught competency")
    {
        const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n");
        const BackwardTrace t = trace_backward(g, "1.1");
        CHECK(t.topics.size() == 1);
        CHECK(t.courses.empty());
        CHECK(t.outcomes.empty());
    }
    SUBCASE("two courses on one topic, any level")
    {
        const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ C2 }\n"
                                 "course x \"X\" { year 1 outcome o { targets a/t1 @ A1 } }\n"
                                 "course y \"Y\" { year 2 outcome p { targets a/t1 @ C2 } }\n"
                                 "course z \"Z\" { year 2 outcome q { targets a/t2 @ C2 } }\n");
        const BackwardTrace t = trace_backward(g, "1.1");
        CHECK(t.courses == std::vector<std::string>{"x", "y"});
        CHECK(t.outcomes == std::vector<std::string>{"x/o", "y/p"});
    }
    SUBCASE("unknown competency")
    {
        CHECK_THROWS_AS(trace_backward(fixture_graph(), "9.9"), Error);
    }
}

// ---------------------------------------------------------------------------
// Coverage
// ---------------------------------------------------------------------------

TEST_CASE("coverage: one of three requirements met")
{
    const Graph g = graph_of(kOneThird);
    const CoverageReport r = competency_coverage(g, "1.1");
    CHECK(r.topic_fraction == Fraction(1, 3));
    CHECK(status_of(r, "a/t1").satisfied);
    const auto& t2 = status_of(r, "a/t2");
    CHECK_FALSE(t2.satisfied);
    REQUIRE(t2.best_offer.has_value());
    CHECK(t2.best_offer->level == BloomLevel::A1);
    const auto& t3 = status_of(r, "a/t3");
    CHECK_FALSE(t3.satisfied);
    CHECK_FALSE(t3.best_offer.has_value());
    CHECK(r == oracle::coverage(g.model().data(), *g.model().find_competency("1.1")));
}

TEST_CASE("coverage: saturated teaching gives fraction one and no gaps")
{
    const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ B1 requires a/t2 @ C1 skill s1 disposition d1 }\n"
                             "course c \"C\" { year 1 outcome o {\n"
                             "  targets a/t1 @ C2 targets a/t2 @ C2 skill s1 disposition d1 } }\n");
    const CoverageReport r = competency_coverage(g, "1.1");
    CHECK(r.topic_fraction == Fraction(1, 1));
    CHECK(r.skills_ok);
    CHECK(r.dispositions_ok);
    CHECK(gap_report(g).empty());
}

TEST_CASE("coverage: no outcomes gives fraction zero")
{
    const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ B1 requires a/t2 @ C1 skill s1 }\n");
    const CoverageReport r = competency_coverage(g, "1.1");
    CHECK(r.topic_fraction == Fraction(0, 1));
    CHECK_FALSE(r.skills_ok);
    CHECK(r.dispositions_ok);
}

TEST_CASE("coverage: unknown competency is E_UNKNOWN_ID")
{
    try {
        (void)competency_coverage(fixture_graph(), "9.9");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.diagnostic().code == codes::unknown_id);
    }
}

TEST_CASE("coverage: best offer prefers level, then course, then outcome")
{
    const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ C2 }\n"
                             "course b \"B\" { year 1 outcome z { targets a/t1 @ C1 } outcome y { targets a/t1 @ C1 } }\n"
                             "course a \"A\" { year 1 outcome x { targets a/t1 @ B1 } }\n"
                             "course d \"D\" { year 1 outcome w { targets a/t1 @ C1 } }\n");
    const CoverageReport r = competency_coverage(g, "1.1");
    const auto& s = r.statuses.at(0);
    REQUIRE(s.best_offer.has_value());
    CHECK(s.best_offer->course == "b");
    CHECK(s.best_offer->outcome == "y");
    CHECK(s.best_offer->level == BloomLevel::C1);
}

TEST_CASE("coverage: strict mode only counts courses sharing a topic")
{
    const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ A1 skill s1 }\n"
                             "course x \"X\" { year 1 outcome o { targets a/t2 @ A1 skill s1 } }\n"
                             "course y \"Y\" { year 1 outcome o { targets a/t1 @ A1 } }\n");
    CHECK(competency_coverage(g, "1.1").skills_ok);
    CHECK_FALSE(competency_coverage(g, "1.1", {true}).skills_ok);
    CHECK(competency_coverage(g, "1.1", {true}) ==
          oracle::coverage(g.model().data(), *g.model().find_competency("1.1"), true));
}

TEST_CASE("matrix: per-course satisfied requirement counts")
{
    const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ B1 requires a/t2 @ B1 }\n"
                             "course ca \"A\" { year 1 outcome o { targets a/t1 @ B1 } }\n"
                             "course cb \"B\" { year 1 outcome o { targets a/t1 @ C1 targets a/t2 @ A1 } }\n");
    const CoverageMatrix mx = coverage_matrix(g);
    CHECK(mx.competencies == std::vector<std::string>{"1.1"});
    CHECK(mx.courses == std::vector<std::string>{"ca", "cb"});
    CHECK(mx.cells == std::vector<std::vector<int>>{{1, 1}});
    // Neither course alone nor both together meet t2.
    CHECK(competency_coverage(g, "1.1").topic_fraction == Fraction(1, 2));
    CHECK(mx == oracle::matrix(g.model().data()));
}

TEST_CASE("matrix: empty model and fixture")
{
    const CoverageMatrix empty = coverage_matrix(build_graph(Model{}));
    CHECK(empty.competencies.empty());
    CHECK(empty.courses.empty());
    CHECK(empty.cells.empty());

    const CoverageMatrix mx = coverage_matrix(fixture_graph());
    REQUIRE(mx.cells.size() == 23);
    CHECK(mx.courses.size() == 15);
    for (const auto& row : mx.cells)
        CHECK(std::any_of(row.begin(), row.end(), [](int n) { return n > 0; }));
    CHECK(mx == oracle::matrix(fixture_model().data()));
}

TEST_CASE("gaps: under-level offers are reported with the best offer")
{
    const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ B2 }\n"
                             "course c \"C\" { year 1 outcome o { targets a/t1 @ A1 } }\n");
    const GapReport r = gap_report(g);
    REQUIRE(r.competencies.size() == 1);
    REQUIRE(r.competencies[0].gaps.size() == 1);
    const Gap& gap = r.competencies[0].gaps[0];
    CHECK(gap.reason == GapReason::under_level);
    CHECK(gap.status.required == BloomLevel::B2);
    REQUIRE(gap.status.best_offer.has_value());
    CHECK(gap.status.best_offer->level == BloomLevel::A1);
    CHECK(r.untaught_topics.empty());
    CHECK(r.orphan_topics.empty());
}

TEST_CASE("gaps: untaught and orphan topics")
{
    const Graph g = graph_of(kOneThird);
    const GapReport r = gap_report(g);
    CHECK(r.untaught_topics == std::vector<std::string>{"a/t3"});
    CHECK(r.orphan_topics == std::vector<std::string>{"a/t4"});
    CHECK(r == oracle::gaps(g.model().data()));
}

TEST_CASE("gaps: fixture has one topic gap per competency plus the designed skill and disposition gaps")
{
    const GapReport r = gap_report(fixture_graph());
    CHECK(r.competencies.size() == 23);
    CHECK(r.orphan_topics.empty());
    bool negotiation = false, inventive = false;
    for (const auto& cg : r.competencies) {
        const auto topic_gaps = std::count_if(cg.gaps.begin(), cg.gaps.end(),
                                              [](const Gap& g) { return g.status.kind == RequirementKind::topic; });
        CHECK(topic_gaps == 1);
        for (const auto& gap : cg.gaps) {
            negotiation = negotiation || (gap.reason == GapReason::skill_missing && gap.status.id == "negotiation");
            inventive = inventive || (gap.reason == GapReason::disposition_missing && gap.status.id == "inventive");
        }
    }
    CHECK(negotiation);
    CHECK(inventive);
    CHECK(r == oracle::gaps(fixture_model().data()));
}

TEST_CASE("gaps: removing one course exposes exactly the requirements only it satisfied")
{
    const Model& m = fixture_model();
    const Model reduced = validated(without_courses(m.data(), {"course-sw"}));
    const GapReport before = gap_report(fixture_graph());
    const GapReport after = gap_report(build_graph(reduced));

    auto topic_gaps = [](const GapReport& r) {
        std::set<std::pair<std::string, std::string>> out;
        for (const auto& cg : r.competencies)
            for (const auto& g : cg.gaps)
                if (g.status.kind == RequirementKind::topic)
                    out.insert({cg.competency, g.status.id});
        return out;
    };
    const auto b = topic_gaps(before);
    const auto a = topic_gaps(after);
    CHECK(std::includes(a.begin(), a.end(), b.begin(), b.end()));

    // Independently: requirements satisfied with course-sw but not without it.
    std::set<std::pair<std::string, std::string>> expected;
    for (const Competency* c : m.competencies())
        for (const auto& req : c->topic_reqs)
            if (oracle::satisfied_by(m.data(), req) && !oracle::satisfied_by(reduced.data(), req))
                expected.insert({c->id, req.topic});
    CHECK_FALSE(expected.empty());
    std::set<std::pair<std::string, std::string>> added;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(added, added.end()));
    CHECK(added == expected);
}

TEST_CASE("pathway profile: block means and emphasis")
{
    SUBCASE("fixture pathways are balanced")
    {
        for (const char* id : {"se", "data", "it"}) {
            const PathwayProfile p = pathway_profile(fixture_graph(), id);
            CHECK(p.blocks.size() == 5);
            CHECK(p.warnings.empty());
            for (const auto& b : p.blocks)
                CHECK(b.mean_topic_fraction == Fraction(4, 5));
        }
        const PathwayProfile se = pathway_profile(fixture_graph(), "se");
        CHECK(se.blocks[0].emphasized);
        CHECK_FALSE(se.blocks[1].emphasized);
        CHECK(se.blocks[4].emphasized);
    }
    SUBCASE("deleting the data courses underserves the data pathway")
    {
        const Model reduced =
            validated(without_courses(fixture_model().data(), {"course-db", "course-bigdata", "course-ml"}));
        const PathwayProfile p = pathway_profile(build_graph(reduced), "data");
        REQUIRE_FALSE(p.warnings.empty());
        CHECK(p.warnings[0].code == codes::emphasis_underserved);
        CHECK(p.warnings[0].severity == Severity::warning);
        CHECK(p.blocks[1].mean_topic_fraction < Fraction(4, 5));
    }
    SUBCASE("a pathway emphasizing every block has no baseline and no warning")
    {
        const Graph g = graph_of("competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n"
                                 "pathway all \"All\" { emphasizes 1 }\n");
        const PathwayProfile p = pathway_profile(g, "all");
        CHECK(p.warnings.empty());
        REQUIRE(p.blocks.size() == 1);
        CHECK(p.blocks[0].mean_topic_fraction == Fraction(0, 1));
    }
    SUBCASE("unknown pathway")
    {
        CHECK_THROWS_AS(pathway_profile(fixture_graph(), "nope"), Error);
    }
}

// ---------------------------------------------------------------------------
// What-if
// ---------------------------------------------------------------------------

TEST_CASE("what-if: the empty delta changes nothing")
{
    const WhatIfResult r = whatif(fixture_graph(), WhatIfDelta{});
    CHECK(r.before == r.after);
    CHECK(r.changed.empty());
    CHECK(r.before == gap_report(fixture_graph()));
}

TEST_CASE("what-if: teaching a missing level raises the fraction")
{
    const Graph g = graph_of(kOneThird);
    const WhatIfResult r = whatif(g, single_edit(true, "c", "o2", "a/t2", BloomLevel::A2));
    REQUIRE(r.changed.size() == 1);
    CHECK(r.changed[0].competency == "1.1");
    CHECK(r.changed[0].before == Fraction(1, 3));
    CHECK(r.changed[0].after == Fraction(2, 3));
    // The base graph is untouched.
    CHECK(competency_coverage(g, "1.1").topic_fraction == Fraction(1, 3));
}

TEST_CASE("what-if: removing the only satisfying target lowers the fraction")
{
    const Graph g = graph_of(kOneThird);
    const WhatIfResult r = whatif(g, single_edit(false, "c", "o", "a/t1", BloomLevel::B2));
    REQUIRE(r.changed.size() == 1);
    CHECK(r.changed[0].after < r.changed[0].before);
    CHECK(r.changed[0].after == Fraction(0, 1));
}

TEST_CASE("what-if: creating an outcome and targeting from it")
{
    const Graph g = graph_of(kOneThird);
    WhatIfDelta d = single_edit(true, "c", "fresh", "a/t3", BloomLevel::C2);
    d.creations.push_back({"c", "fresh", "Fresh outcome", {}});
    const WhatIfResult r = whatif(g, d);
    REQUIRE(r.changed.size() == 1);
    CHECK(r.changed[0].after == Fraction(2, 3));
    const Model after = validated(materialize(g.model(), d));
    CHECK(after.find_outcome("c/fresh") != nullptr);
    CHECK(gap_report(build_graph(after)) == r.after);
}

TEST_CASE("what-if: unresolvable deltas are rejected")
{
    const Graph g = graph_of(kOneThird);
    auto code_of = [&](const WhatIfDelta& d) -> std::string {
        try {
            (void)whatif(g, d);
        } catch (const Error& e) {
            return e.diagnostic().code;
        }
        return "";
    };
    CHECK(code_of(single_edit(true, "zz", "o", "a/t1", BloomLevel::A1)) == codes::delta_unresolved);
    CHECK(code_of(single_edit(true, "c", "zz", "a/t1", BloomLevel::A1)) == codes::delta_unresolved);
    CHECK(code_of(single_edit(true, "c", "o", "a/zz", BloomLevel::A1)) == codes::delta_unresolved);
    CHECK(code_of(single_edit(false, "c", "o", "a/t1", BloomLevel::A1)) == codes::delta_unresolved);
    CHECK(code_of(single_edit(true, "c", "o", "a/t1", BloomLevel::C1)) == codes::dup_topic);
    CHECK(code_of(single_edit(false, "c", "o2", "a/t4", BloomLevel::A1)) == codes::empty_reqs);
    WhatIfDelta twice;
    twice.creations = {{"c", "o", "", {}}};
    CHECK(code_of(twice) == codes::dup_id);
}

// ---------------------------------------------------------------------------
// Portfolio
// ---------------------------------------------------------------------------

namespace {

const char* kPortfolioModel = R"(
competency "1.1" in block 1 {
  requires a/t1 @ B1
  requires a/t2 @ B1
  requires a/t3 @ B1
  requires a/t4 @ B1
}
competency "1.2" in block 1 { requires a/t1 @ A1 }
course c "C" {
  year 1
  outcome o { targets a/t2 @ B1 }
}
portfolio nobody { }
portfolio full {
  achievement p1 "Page" { created "2025-01-01" revisions 2 links competency "1.1" @ C2 }
}
portfolio partial {
  achievement p1 "Page" { created "2025-01-01" revisions 1 links outcome c/o @ B2 }
}
portfolio low {
  achievement p1 "Page" { created "2025-01-01" revisions 1 links competency "1.1" @ A2 }
}
)";

}  // namespace

TEST_CASE("attainment from linked competencies and outcomes")
{
    const Graph g = graph_of(kPortfolioModel);
    CHECK(attainment(g, "nobody", "1.1").fraction == Fraction(0, 1));
    const Attainment full = attainment(g, "full", "1.1");
    CHECK(full.fraction == Fraction(1, 1));
    CHECK(full.evidence.size() == 4);
    const Attainment partial = attainment(g, "partial", "1.1");
    CHECK(partial.fraction == Fraction(1, 4));
    REQUIRE(partial.evidence.size() == 1);
    CHECK(partial.evidence[0].topic == "a/t2");
    CHECK(partial.evidence[0].via == LinkKind::outcome);
    CHECK(attainment(g, "low", "1.1").fraction == Fraction(0, 1));
    CHECK(attainment(g, "full", "1.2").fraction == Fraction(0, 1));
}

TEST_CASE("attainment rejects unknown students and competencies")
{
    const Graph g = graph_of(kPortfolioModel);
    CHECK_THROWS_AS(attainment(g, "ghost", "1.1"), Error);
    CHECK_THROWS_AS(attainment(g, "full", "9.9"), Error);
}

TEST_CASE("attainment is monotone in added evidence and invariant under record order")
{
    const Graph& g = fixture_graph();
    const StudentPortfolio& base = *fixture_model().find_portfolio("student-01");
    for (const Competency* c : fixture_model().competencies()) {
        const Fraction f = attainment(g, base, c->id).fraction;

        StudentPortfolio reversed = base;
        std::reverse(reversed.records.begin(), reversed.records.end());
        for (auto& r : reversed.records)
            std::reverse(r.linked_specs.begin(), r.linked_specs.end());
        CHECK(attainment(g, reversed, c->id).fraction == f);

        StudentPortfolio more = base;
        more.records.push_back({"extra", base.student, "Extra", {{LinkKind::competency, c->id, BloomLevel::A2}}, 1, "2025-10-01"});
        CHECK(attainment(g, more, c->id).fraction >= f);

        StudentPortfolio top = base;
        top.records.push_back({"extra", base.student, "Extra", {{LinkKind::competency, c->id, BloomLevel::C2}}, 1, "2025-10-01"});
        CHECK(attainment(g, top, c->id).fraction == Fraction(1, 1));
    }
}

TEST_CASE("cohort statistics")
{
    SUBCASE("fixture")
    {
        const CohortStats s = cohort_stats(fixture_model().data().portfolios);
        CHECK(s.students == 23);
        CHECK(s.pages == 931);
        CHECK(s.specs_total == 7805);
        CHECK(s.revisions_total == 3747);
        CHECK(s.specs_per_page_mean() == Fraction(7805, 931));
        CHECK(s.specs_per_page_mean().to_decimal() == "8.38");
    }
    SUBCASE("single record without links")
    {
        const std::vector<StudentPortfolio> one = {{"s", {{"r", "s", "R", {}, 1, "2025-01-01"}}}};
        CHECK(cohort_stats(one).specs_per_page_mean() == Fraction(0, 1));
    }
    SUBCASE("two and three pages with four links each")
    {
        const AchievementRecord r{"r", "s", "R",
                                  {{LinkKind::competency, "1.1", BloomLevel::A1},
                                   {LinkKind::competency, "1.2", BloomLevel::A1},
                                   {LinkKind::competency, "1.3", BloomLevel::A1},
                                   {LinkKind::competency, "1.4", BloomLevel::A1}},
                                  1,
                                  "2025-01-01"};
        const std::vector<StudentPortfolio> cohort = {{"a", {r, r}}, {"b", {r, r, r}}};
        const CohortStats s = cohort_stats(cohort);
        CHECK(s.pages == 5);
        CHECK(s.specs_per_page_mean() == Fraction(4, 1));
    }
    SUBCASE("no pages")
    {
        const std::vector<StudentPortfolio> none = {{"s", {}}};
        try {
            (void)cohort_stats(none).specs_per_page_mean();
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.diagnostic().code == codes::empty_cohort);
        }
        CHECK_THROWS_AS(cohort_stats({}).specs_per_page_mean(), Error);
    }
}
