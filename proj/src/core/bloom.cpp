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

#include "cforge/bloom.hpp"

namespace cforge {

std::string_view to_string(BloomLevel level) noexcept
{
    switch (level) {
    case BloomLevel::A1: return "A1";
    case BloomLevel::A2: return "A2";
    case BloomLevel::B1: return "B1";
    case BloomLevel::B2: return "B2";
    case BloomLevel::C1: return "C1";
    case BloomLevel::C2: return "C2";
    }
    return "?";
}

std::string_view bloom_label(BloomLevel level) noexcept
{
    switch (level) {
    case BloomLevel::A1: return "Remembering";
    case BloomLevel::A2: return "Understanding";
    case BloomLevel::B1: return "Applying";
    case BloomLevel::B2: return "Analyzing";
    case BloomLevel::C1: return "Evaluating";
    case BloomLevel::C2: return "Creating";
    }
    return "?";
}

std::optional<BloomLevel> parse_bloom(std::string_view code) noexcept
{
    for (BloomLevel level : kAllBloomLevels) {
        if (to_string(level) == code)
            return level;
    }
    return std::nullopt;
}

}  // namespace cforge
