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

#include "cforge/fraction.hpp"
#include "cforge/graph.hpp"
#include "cforge/model.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cforge {

/// One linked spec of an achievement record attesting one topic requirement.
struct Evidence {
    std::string record;
    std::string topic;
    BloomLevel required;
    BloomLevel level;  // self-assessed
    LinkKind via;
    std::string ref;  // the linked competency or outcome

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Attainment {
    std::string student;
    std::string competency;
    Fraction fraction;               // attained topic requirements / all topic requirements
    std::vector<Evidence> evidence;  // sorted by record, topic, then link

    friend bool operator==(const Attainment&, const Attainment&) = default;
};

/// A topic requirement is attained when a linked spec names the competency
/// itself, or an outcome targeting the topic, with a self-assessed level at
/// or above the requirement. Throws Error(E_UNKNOWN_ID).
Attainment attainment(const Graph& graph, const StudentPortfolio& portfolio, std::string_view competency);

/// Looks the portfolio up in the graph's model. Throws Error(E_UNKNOWN_ID).
Attainment attainment(const Graph& graph, std::string_view student, std::string_view competency);

struct CohortStats {
    std::int64_t students = 0;
    std::int64_t pages = 0;
    std::int64_t specs_total = 0;
    std::int64_t revisions_total = 0;

    /// specs_total / pages. Throws Error(E_EMPTY_COHORT) when pages == 0.
    Fraction specs_per_page_mean() const;

    friend bool operator==(const CohortStats&, const CohortStats&) = default;
};

CohortStats cohort_stats(std::span<const StudentPortfolio> portfolios);

}  // namespace cforge
