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

#include "cforge/model.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cforge {

/// Id lookups over a ModelData instance. Pointers refer into that instance,
/// which must outlive the index.
struct ModelIndex {
    explicit ModelIndex(const ModelData& data);

    template <class T>
    using ById = std::map<std::string, const T*, std::less<>>;

    ById<Topic> topics;
    ById<KnowledgeArea> areas;
    ById<Skill> skills;
    ById<Disposition> dispositions;
    std::map<int, const CompetencyBlock*> blocks;
    ById<Competency> competencies;
    std::vector<const Competency*> competency_order;
    ById<Course> courses;
    ById<LearningOutcome> outcomes;
    ById<LearningObject> objects;
    ById<LearningPath> paths;
    ById<Pathway> pathways;
    ById<StudentPortfolio> portfolios;
};

/// Grants the validator access to Model's private constructor.
struct ModelBuilder {
    static Model make(ModelData data) { return Model(std::move(data)); }
};

}  // namespace cforge
