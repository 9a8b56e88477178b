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
#include "cforge/diagnostic.hpp"

#include <string>
#include <vector>

namespace cforge {

/// One outcome-target row: outcome `course/outcome` targets `topic` at `level`.
struct TargetEdit {
    std::string course;
    std::string outcome;
    std::string topic;
    BloomLevel level = BloomLevel::A1;
    SourceSpan span;
};

/// Declares a new, initially target-less outcome in an existing course.
struct OutcomeCreation {
    std::string course;
    std::string outcome;
    std::string statement;
    SourceSpan span;
};

/// Sandboxed edit of the teaching side. Applied as: creations, then
/// removals, then additions.
struct WhatIfDelta {
    std::vector<OutcomeCreation> creations;
    std::vector<TargetEdit> removals;
    std::vector<TargetEdit> additions;

    bool empty() const noexcept { return creations.empty() && removals.empty() && additions.empty(); }
};

}  // namespace cforge
