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

#include <array>
#include <optional>
#include <string_view>

namespace cforge {

/// Cognitive proficiency level of the revised Bloom taxonomy.
///
/// The enumerator value is the level's rank: A1 (Remembering) = 1 up to
/// C2 (Creating) = 6. Ranks form a strict total order.
enum class BloomLevel : int {
    A1 = 1,  // Remembering
    A2 = 2,  // Understanding
    B1 = 3,  // Applying
    B2 = 4,  // Analyzing
    C1 = 5,  // Evaluating
    C2 = 6,  // Creating
};

inline constexpr std::array<BloomLevel, 6> kAllBloomLevels = {
    BloomLevel::A1, BloomLevel::A2, BloomLevel::B1,
    BloomLevel::B2, BloomLevel::C1, BloomLevel::C2,
};

constexpr int rank(BloomLevel level) noexcept { return static_cast<int>(level); }

/// True iff `a` is at least as demanding as `b`.
constexpr bool bloom_geq(BloomLevel a, BloomLevel b) noexcept { return rank(a) >= rank(b); }

std::string_view to_string(BloomLevel level) noexcept;

/// Human label, e.g. "Applying".
std::string_view bloom_label(BloomLevel level) noexcept;

/// Parses one of "A1".."C2"; anything else yields nullopt.
std::optional<BloomLevel> parse_bloom(std::string_view code) noexcept;

}  // namespace cforge
