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
#include "cforge/model.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cforge {

enum class NodeKind {
    block,
    competency,
    area,
    topic,
    skill,
    disposition,
    course,
    outcome,
    path,
    object,
    pathway,
};

enum class EdgeKind {
    competency_requires_topic,  // carries level
    outcome_targets_topic,      // carries level
    course_has_outcome,
    competency_requires_skill,
    competency_requires_disposition,
    outcome_exercises_skill,
    outcome_exercises_disposition,
    path_stage_object,  // carries stage index
    object_assesses_outcome,
    block_contains_competency,
    pathway_emphasizes_block,
};

inline constexpr int kEdgeKindCount = 11;

std::string_view to_string(NodeKind kind) noexcept;
/// Upper-case label, e.g. "COMPETENCY_REQUIRES_TOPIC".
std::string_view to_string(EdgeKind kind) noexcept;

using NodeId = std::uint32_t;

struct Node {
    NodeKind kind;
    std::string id;  // outcomes use "<course-id>/<outcome-id>", blocks their number

    friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
    EdgeKind kind;
    NodeId from;
    NodeId to;
    std::optional<BloomLevel> level;
    std::optional<int> stage;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Typed, immutable graph view of a validated model. Edges are indexed in
/// both directions.
class Graph {
public:
    Graph() = default;

    const Model& model() const noexcept { return model_; }

    std::span<const Node> nodes() const noexcept { return nodes_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Node& node(NodeId id) const { return nodes_.at(id); }

    std::optional<NodeId> find(NodeKind kind, std::string_view id) const;

    /// Edges of `kind` leaving / entering `node`, ordered by the id of the
    /// node at the other end.
    std::vector<const Edge*> out_edges(NodeId node, EdgeKind kind) const;
    std::vector<const Edge*> in_edges(NodeId node, EdgeKind kind) const;

    std::size_t edge_count(EdgeKind kind) const noexcept { return per_kind_[static_cast<int>(kind)]; }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    friend Graph build_graph(const Model& model);

    Model model_;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> out_;  // node -> edge indices
    std::vector<std::vector<std::uint32_t>> in_;
    std::vector<std::vector<NodeId>> by_kind_sorted_;
    std::size_t per_kind_[kEdgeKindCount] = {};
};

/// Deterministic: equal models give equal graphs.
Graph build_graph(const Model& model);

struct TraceHit {
    std::string competency;
    BloomLevel level;

    friend bool operator==(const TraceHit&, const TraceHit&) = default;
};

/// Competencies holding a requirement on `topic`, with the required level,
/// ordered by competency id. Throws Error(E_UNKNOWN_ID).
std::vector<TraceHit> trace_forward(const Graph& graph, std::string_view topic);

struct BackwardTrace {
    std::vector<TopicRequirement> topics;
    std::vector<std::string> courses;   // owners of `outcomes`, sorted
    std::vector<std::string> outcomes;  // targeting any required topic at any level, sorted

    friend bool operator==(const BackwardTrace&, const BackwardTrace&) = default;
};

/// Throws Error(E_UNKNOWN_ID).
BackwardTrace trace_backward(const Graph& graph, std::string_view competency);

}  // namespace cforge
