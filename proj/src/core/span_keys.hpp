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

// Keys under which front ends record element locations in Draft::spans and
// the validator looks them up. Indices are positions in the draft lists.

#include <string>
#include <string_view>

namespace cforge::keys {

inline std::string cat(std::string_view a, std::string_view b) { return std::string(a).append(b); }

inline std::string catalog(std::size_t i) { return "catalog#" + std::to_string(i); }
inline std::string area(std::string_view id) { return cat("area:", id); }
inline std::string topic(std::string_view qualified) { return cat("topic:", qualified); }
inline std::string skill(std::string_view id) { return cat("skill:", id); }
inline std::string disposition(std::string_view id) { return cat("disposition:", id); }
inline std::string block(int id) { return "block:" + std::to_string(id); }

inline std::string competency(std::string_view id) { return cat("competency:", id); }
inline std::string competency_block(std::string_view id) { return competency(id) + "/block"; }

inline std::string course(std::string_view id) { return cat("course:", id); }
inline std::string course_path(std::string_view course_id, std::string_view path)
{
    return course(course_id) + "/path#" + std::string(path);
}
inline std::string outcome(std::string_view course_id, std::string_view id)
{
    return "outcome:" + std::string(course_id) + "/" + std::string(id);
}

// Children of a competency or outcome owner key.
inline std::string requirement(const std::string& owner, std::size_t i) { return owner + "/req#" + std::to_string(i); }
inline std::string owner_skill(const std::string& owner, std::string_view id) { return owner + "/skill#" + std::string(id); }
inline std::string owner_disposition(const std::string& owner, std::string_view id)
{
    return owner + "/disposition#" + std::string(id);
}

inline std::string object(std::string_view id) { return cat("object:", id); }
inline std::string assessment(std::string_view object_id, std::string_view id)
{
    return object(object_id) + "/assessment:" + std::string(id);
}
inline std::string assessment_ref(const std::string& owner, std::string_view ref) { return owner + "/outcome#" + std::string(ref); }

inline std::string path(std::string_view id) { return cat("path:", id); }
inline std::string path_object(std::string_view path_id, std::string_view object_id)
{
    return path(path_id) + "/object#" + std::string(object_id);
}

inline std::string pathway(std::string_view id) { return cat("pathway:", id); }
inline std::string pathway_block(std::string_view id, int block) { return pathway(id) + "/block#" + std::to_string(block); }

inline std::string portfolio(std::string_view student) { return cat("portfolio:", student); }
inline std::string achievement(std::string_view student, std::string_view id)
{
    return "achievement:" + std::string(student) + "/" + std::string(id);
}
inline std::string link(const std::string& owner, std::size_t i) { return owner + "/link#" + std::to_string(i); }

}  // namespace cforge::keys
