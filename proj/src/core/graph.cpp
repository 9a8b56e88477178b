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

#include "cforge/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace cforge {

std::string_view to_string(NodeKind kind) noexcept
{
    switch (kind) {
    case NodeKind::block: return "block";
    case NodeKind::competency: return "competency";
    case NodeKind::area: return "area";
    case NodeKind::topic: return "topic";
    case NodeKind::skill: return "skill";
    case NodeKind::disposition: return "disposition";
    case NodeKind::course: return "course";
    case NodeKind::outcome: return "outcome";
    case NodeKind::path: return "path";
    case NodeKind::object: return "object";
    case NodeKind::pathway: return "pathway";
    }
    return "?";
}

std::string_view to_string(EdgeKind kind) noexcept
{
    switch (kind) {
    case EdgeKind::competency_requires_topic: return "COMPETENCY_REQUIRES_TOPIC";
    case EdgeKind::outcome_targets_topic: return "OUTCOME_TARGETS_TOPIC";
    case EdgeKind::course_has_outcome: return "COURSE_HAS_OUTCOME";
    case EdgeKind::competency_requires_skill: return "COMPETENCY_REQUIRES_SKILL";
    case EdgeKind::competency_requires_disposition: return "COMPETENCY_REQUIRES_DISPOSITION";
    case EdgeKind::outcome_exercises_skill: return "OUTCOME_EXERCISES_SKILL";
    case EdgeKind::outcome_exercises_disposition: return "OUTCOME_EXERCISES_DISPOSITION";
    case EdgeKind::path_stage_object: return "PATH_STAGE_OBJECT";
    case EdgeKind::object_assesses_outcome: return "OBJECT_ASSESSES_OUTCOME";
    case EdgeKind::block_contains_competency: return "BLOCK_CONTAINS_COMPETENCY";
    case EdgeKind::pathway_emphasizes_block: return "PATHWAY_EMPHASIZES_BLOCK";
    }
    return "?";
}

namespace {

constexpr int kNodeKindCount = 11;

class GraphBuilder {
public:
    GraphBuilder(std::vector<Node>& nodes, std::vector<Edge>& edges) : nodes_(nodes), edges_(edges) {}

    NodeId node(NodeKind kind, std::string id)
    {
        auto [it, inserted] = ids_.try_emplace({kind, id}, static_cast<NodeId>(nodes_.size()));
        if (inserted)
            nodes_.push_back({kind, std::move(id)});
        return it->second;
    }

    NodeId at(NodeKind kind, const std::string& id) const { return ids_.at({kind, id}); }

    void edge(EdgeKind kind, NodeId from, NodeId to, std::optional<BloomLevel> level = {},
              std::optional<int> stage = {})
    {
        const auto key = std::make_tuple(kind, from, to, level ? rank(*level) : 0, stage.value_or(-1));
        if (seen_.insert(key).second)
            edges_.push_back({kind, from, to, level, stage});
    }

private:
    std::vector<Node>& nodes_;
    std::vector<Edge>& edges_;
    std::map<std::pair<NodeKind, std::string>, NodeId> ids_;
    std::set<std::tuple<EdgeKind, NodeId, NodeId, int, int>> seen_;
};

}  // namespace

Graph build_graph(const Model& model)
{
    Graph g;
    g.model_ = model;
    GraphBuilder b(g.nodes_, g.edges_);
    const ModelData& m = model.data();

    // nodes, grouped by kind in canonical model order
    for (const auto& block : m.blocks)
        b.node(NodeKind::block, std::to_string(block.id));
    for (const auto& block : m.blocks) {
        for (const auto& c : block.competencies)
            b.node(NodeKind::competency, c.id);
    }
    for (const auto& cat : m.catalogs) {
        for (const auto& area : cat.areas)
            b.node(NodeKind::area, area.id);
    }
    for (const auto& cat : m.catalogs) {
        for (const auto& area : cat.areas) {
            for (const auto& t : area.topics)
                b.node(NodeKind::topic, t.id);
        }
    }
    for (const auto& cat : m.catalogs) {
        for (const auto& s : cat.skills)
            b.node(NodeKind::skill, s.id);
    }
    for (const auto& cat : m.catalogs) {
        for (const auto& d : cat.dispositions)
            b.node(NodeKind::disposition, d.id);
    }
    for (const auto& c : m.courses)
        b.node(NodeKind::course, c.id);
    for (const auto& c : m.courses) {
        for (const auto& o : c.outcomes)
            b.node(NodeKind::outcome, outcome_ref(c.id, o.id));
    }
    for (const auto& p : m.paths)
        b.node(NodeKind::path, p.id);
    for (const auto& o : m.objects)
        b.node(NodeKind::object, o.id);
    for (const auto& p : m.pathways)
        b.node(NodeKind::pathway, p.id);

    // edges
    for (const auto& block : m.blocks) {
        const NodeId bn = b.at(NodeKind::block, std::to_string(block.id));
        for (const auto& c : block.competencies) {
            const NodeId cn = b.at(NodeKind::competency, c.id);
            b.edge(EdgeKind::block_contains_competency, bn, cn);
            for (const auto& r : c.topic_reqs)
                b.edge(EdgeKind::competency_requires_topic, cn, b.at(NodeKind::topic, r.topic), r.level);
            for (const auto& s : c.skill_reqs)
                b.edge(EdgeKind::competency_requires_skill, cn, b.at(NodeKind::skill, s));
            for (const auto& d : c.disposition_reqs)
                b.edge(EdgeKind::competency_requires_disposition, cn, b.at(NodeKind::disposition, d));
        }
    }
    for (const auto& c : m.courses) {
        const NodeId cn = b.at(NodeKind::course, c.id);
        for (const auto& o : c.outcomes) {
            const NodeId on = b.at(NodeKind::outcome, outcome_ref(c.id, o.id));
            b.edge(EdgeKind::course_has_outcome, cn, on);
            for (const auto& t : o.targets)
                b.edge(EdgeKind::outcome_targets_topic, on, b.at(NodeKind::topic, t.topic), t.level);
            for (const auto& s : o.skills_exercised)
                b.edge(EdgeKind::outcome_exercises_skill, on, b.at(NodeKind::skill, s));
            for (const auto& d : o.dispositions_exercised)
                b.edge(EdgeKind::outcome_exercises_disposition, on, b.at(NodeKind::disposition, d));
        }
    }
    for (const auto& p : m.paths) {
        const NodeId pn = b.at(NodeKind::path, p.id);
        for (std::size_t s = 0; s < p.stages.size(); ++s) {
            for (const auto& o : p.stages[s])
                b.edge(EdgeKind::path_stage_object, pn, b.at(NodeKind::object, o), std::nullopt, static_cast<int>(s));
        }
    }
    for (const auto& o : m.objects) {
        const NodeId on = b.at(NodeKind::object, o.id);
        for (const auto& a : o.assessments) {
            for (const auto& ref : a.outcome_refs)
                b.edge(EdgeKind::object_assesses_outcome, on, b.at(NodeKind::outcome, ref));
        }
    }
    for (const auto& p : m.pathways) {
        const NodeId pn = b.at(NodeKind::pathway, p.id);
        for (int block : p.emphasized_blocks)
            b.edge(EdgeKind::pathway_emphasizes_block, pn, b.at(NodeKind::block, std::to_string(block)));
    }

    g.out_.resize(g.nodes_.size());
    g.in_.resize(g.nodes_.size());
    for (std::uint32_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        g.out_[e.from].push_back(i);
        g.in_[e.to].push_back(i);
        ++g.per_kind_[static_cast<int>(e.kind)];
    }
    auto order_by = [&](bool by_target) {
        return [&g, by_target](std::uint32_t a, std::uint32_t b) {
            const Edge& ea = g.edges_[a];
            const Edge& eb = g.edges_[b];
            const auto& na = g.nodes_[by_target ? ea.to : ea.from].id;
            const auto& nb = g.nodes_[by_target ? eb.to : eb.from].id;
            return std::tie(ea.kind, na, a) < std::tie(eb.kind, nb, b);
        };
    };
    for (auto& v : g.out_)
        std::sort(v.begin(), v.end(), order_by(true));
    for (auto& v : g.in_)
        std::sort(v.begin(), v.end(), order_by(false));

    g.by_kind_sorted_.resize(kNodeKindCount);
    for (NodeId i = 0; i < g.nodes_.size(); ++i)
        g.by_kind_sorted_[static_cast<int>(g.nodes_[i].kind)].push_back(i);
    for (auto& v : g.by_kind_sorted_)
        std::sort(v.begin(), v.end(), [&g](NodeId a, NodeId b) { return g.nodes_[a].id < g.nodes_[b].id; });
    return g;
}

std::optional<NodeId> Graph::find(NodeKind kind, std::string_view id) const
{
    if (by_kind_sorted_.empty())
        return std::nullopt;
    const auto& v = by_kind_sorted_[static_cast<int>(kind)];
    auto it = std::lower_bound(v.begin(), v.end(), id,
                               [this](NodeId n, std::string_view key) { return nodes_[n].id < key; });
    if (it == v.end() || nodes_[*it].id != id)
        return std::nullopt;
    return *it;
}

namespace {

std::vector<const Edge*> select(const std::vector<Edge>& edges, const std::vector<std::uint32_t>& idx, EdgeKind kind)
{
    std::vector<const Edge*> out;
    for (auto i : idx) {
        if (edges[i].kind == kind)
            out.push_back(&edges[i]);
    }
    return out;
}

}  // namespace

std::vector<const Edge*> Graph::out_edges(NodeId node, EdgeKind kind) const
{
    return select(edges_, out_.at(node), kind);
}

std::vector<const Edge*> Graph::in_edges(NodeId node, EdgeKind kind) const
{
    return select(edges_, in_.at(node), kind);
}

std::vector<TraceHit> trace_forward(const Graph& graph, std::string_view topic)
{
    const auto tn = graph.find(NodeKind::topic, topic);
    if (!tn)
        throw Error(codes::unknown_id, "unknown topic '" + std::string(topic) + "'");
    std::vector<TraceHit> hits;
    for (const Edge* e : graph.in_edges(*tn, EdgeKind::competency_requires_topic))
        hits.push_back({graph.node(e->from).id, *e->level});
    std::sort(hits.begin(), hits.end(),
              [](const TraceHit& a, const TraceHit& b) { return competency_id_less(a.competency, b.competency); });
    return hits;
}

BackwardTrace trace_backward(const Graph& graph, std::string_view competency)
{
    const auto cn = graph.find(NodeKind::competency, competency);
    if (!cn)
        throw Error(codes::unknown_id, "unknown competency '" + std::string(competency) + "'");
    BackwardTrace trace;
    std::set<std::string> courses, outcomes;
    for (const Edge* req : graph.out_edges(*cn, EdgeKind::competency_requires_topic)) {
        trace.topics.push_back({graph.node(req->to).id, *req->level});
        for (const Edge* target : graph.in_edges(req->to, EdgeKind::outcome_targets_topic)) {
            outcomes.insert(graph.node(target->from).id);
            for (const Edge* owner : graph.in_edges(target->from, EdgeKind::course_has_outcome))
                courses.insert(graph.node(owner->from).id);
        }
    }
    trace.courses.assign(courses.begin(), courses.end());
    trace.outcomes.assign(outcomes.begin(), outcomes.end());
    return trace;
}

}  // namespace cforge
