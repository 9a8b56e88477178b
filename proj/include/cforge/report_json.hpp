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

// JSON documents for analysis results. These are the wire format of the
// HTTP service and of `--json` CLI output; docs/interchange.md lists them.

#include "cforge/coverage.hpp"
#include "cforge/delta.hpp"
#include "cforge/diagnostic.hpp"
#include "cforge/graph.hpp"
#include "cforge/portfolio.hpp"

#include <json.hpp>

namespace cforge::json {

using nlohmann::json;

json to_json(const Fraction& f);
json to_json(const SourceSpan& span);
json to_json(const Diagnostic& d);
json diagnostics_document(const Diagnostics& diags);

json to_json(const CoverageReport& report);
json to_json(const CoverageMatrix& matrix);
json to_json(const GapReport& report);
json to_json(const PathwayProfile& profile);
json to_json(const WhatIfResult& result);
json to_json(const Attainment& attainment);
json to_json(const CohortStats& stats);
json trace_forward_document(std::string_view topic, const std::vector<TraceHit>& hits);
json trace_backward_document(std::string_view competency, const BackwardTrace& trace);

/// Counts of the main model elements plus the snapshot fingerprint.
json model_summary(const Model& model);
json competency_list(const Model& model);

json to_json(const WhatIfDelta& delta);
/// Throws Error(E_PARSE) on a malformed document.
WhatIfDelta delta_from_json(const json& doc);

}  // namespace cforge::json
