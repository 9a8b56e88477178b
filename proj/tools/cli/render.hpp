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

// Human-readable tables for the JSON documents of the C API.

#include "client.hpp"

#include <ostream>

namespace cforge::cli {

/// "file:line:col: error E_CODE: message", one per line.
void print_diagnostics(std::ostream& os, const json& doc);

void print_coverage(std::ostream& os, const json& report);
void print_matrix(std::ostream& os, const json& matrix);
void print_trace_topic(std::ostream& os, const json& doc);
void print_trace_competency(std::ostream& os, const json& doc);
void print_gaps(std::ostream& os, const json& doc);
void print_pathway(std::ostream& os, const json& doc);
void print_whatif(std::ostream& os, const json& doc);
void print_stats(std::ostream& os, const json& doc);

}  // namespace cforge::cli
