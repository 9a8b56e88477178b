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

#include "cforge/bloom.hpp"
#include "cforge/delta.hpp"
#include "cforge/diagnostic.hpp"
#include "cforge/fraction.hpp"
#include "cforge/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cforge {

/// An outcome of a course targeting some topic at some level.
struct Offer {
    std::string course;
    std::string outcome;  // outcome id within `course`
    BloomLevel level;

    friend bool operator==(const Offer&, const Offer&) = default;
};

enum class RequirementKind { topic, skill, disposition };

std::string_view to_string(RequirementKind kind) noexcept;

struct RequirementStatus {
    RequirementKind kind = RequirementKind::topic;
    std::string id;                     // topic, skill or disposition id
    std::optional<BloomLevel> required;  // topic requirements only
    bool satisfied = false;
    std::optional<Offer> best_offer;  // topic requirements with at least one offer

    friend bool operator==(const RequirementStatus&, const RequirementStatus&) = default;
};

struct CoverageReport {
    std::string competency;
    std::vector<RequirementStatus> statuses;  // topics, then skills, then dispositions
    Fraction topic_fraction;
    bool skills_ok = true;
    bool dispositions_ok = true;

    friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

struct CoverageOptions {
    /// Count a skill or disposition only when exercised by a course that
    /// also targets one of the competency's topics.
    bool strict_fpk = false;
};

/// Throws Error(E_UNKNOWN_ID).
CoverageReport competency_coverage(const Graph& graph, std::string_view competency, CoverageOptions options = {});

/// cells[i][j]: topic requirements of competencies[i] satisfied by the
/// outcomes of courses[j] alone.
struct CoverageMatrix {
    std::vector<std::string> competencies;
    std::vector<std::string> courses;
    std::vector<std::vector<int>> cells;

    friend bool operator==(const CoverageMatrix&, const CoverageMatrix&) = default;
};

CoverageMatrix coverage_matrix(const Graph& graph);

enum class GapReason { untaught, under_level, skill_missing, disposition_missing };

std::string_view to_string(GapReason reason) noexcept;

struct Gap {
    RequirementStatus status;
    GapReason reason;

    friend bool operator==(const Gap&, const Gap&) = default;
};

struct CompetencyGaps {
    std::string competency;
    std::vector<Gap> gaps;

    friend bool operator==(const CompetencyGaps&, const CompetencyGaps&) = default;
};

struct GapReport {
    std::vector<CompetencyGaps> competencies;  // only competencies with gaps
    std::vector<std::string> orphan_topics;    // taught, but required by no competency
    std::vector<std::string> untaught_topics;  // required, but targeted by no outcome

    bool empty() const noexcept
    {
        return competencies.empty() && orphan_topics.empty() && untaught_topics.empty();
    }

    friend bool operator==(const GapReport&, const GapReport&) = default;
};

GapReport gap_report(const Graph& graph, CoverageOptions options = {});

struct BlockProfile {
    int block;
    Fraction mean_topic_fraction;
    bool emphasized;

    friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
};

struct PathwayProfile {
    std::string pathway;
    std::vector<BlockProfile> blocks;
    Diagnostics warnings;  // W_EMPHASIS_UNDERSERVED
};

/// Throws Error(E_UNKNOWN_ID).
PathwayProfile pathway_profile(const Graph& graph, std::string_view pathway, CoverageOptions options = {});

struct FractionChange {
    std::string competency;
    Fraction before;
    Fraction after;

    friend bool operator==(const FractionChange&, const FractionChange&) = default;
};

struct WhatIfResult {
    GapReport before;
    GapReport after;
    std::vector<FractionChange> changed;  // competencies whose topic fraction moved
};

/// Recomputes the analyses with `delta` overlaid on the graph's model. The
/// graph and its model are not modified. Throws Error(E_DELTA_UNRESOLVED)
/// and friends when the delta does not apply.
WhatIfResult whatif(const Graph& graph, const WhatIfDelta& delta, CoverageOptions options = {});

/// Applies `delta` to a copy of the model's data. Throws like whatif().
ModelData materialize(const Model& model, const WhatIfDelta& delta);

}  // namespace cforge
