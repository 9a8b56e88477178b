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

#include "cforge/coverage.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace cforge::detail {

/// What the teaching side offers, as seen by the coverage computations.
/// Implemented directly over a graph, and as an overlay adding and removing
/// outcome targets on top of another view.
class TeachingView {
public:
    virtual ~TeachingView() = default;

    /// All outcome targets on `topic`, in (course, outcome) order.
    virtual std::vector<Offer> offers(const std::string& topic) const = 0;
    /// Topics with at least one offer.
    virtual std::set<std::string> taught_topics() const = 0;

    /// Courses with an outcome exercising the skill / disposition.
    virtual const std::set<std::string>& skill_courses(const std::string& skill) const = 0;
    virtual const std::set<std::string>& disposition_courses(const std::string& disposition) const = 0;
};

class GraphTeachingView final : public TeachingView {
public:
    explicit GraphTeachingView(const Graph& graph);

    std::vector<Offer> offers(const std::string& topic) const override;
    std::set<std::string> taught_topics() const override;
    const std::set<std::string>& skill_courses(const std::string& skill) const override;
    const std::set<std::string>& disposition_courses(const std::string& disposition) const override;

private:
    std::map<std::string, std::vector<Offer>> offers_;
    std::map<std::string, std::set<std::string>> skills_;
    std::map<std::string, std::set<std::string>> dispositions_;
};

CoverageReport compute_coverage(const Competency& competency, const TeachingView& view, CoverageOptions options);
GapReport compute_gaps(const Model& model, const TeachingView& view, CoverageOptions options);

}  // namespace cforge::detail
