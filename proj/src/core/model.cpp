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

#include "cforge/model.hpp"

#include "model_index.hpp"

#include <charconv>

namespace cforge {

std::string_view to_string(AssessmentKind kind) noexcept
{
    switch (kind) {
    case AssessmentKind::diagnostic: return "diagnostic";
    case AssessmentKind::formative: return "formative";
    case AssessmentKind::summative: return "summative";
    }
    return "?";
}

std::optional<AssessmentKind> parse_assessment_kind(std::string_view text) noexcept
{
    for (auto kind : {AssessmentKind::diagnostic, AssessmentKind::formative, AssessmentKind::summative}) {
        if (to_string(kind) == text)
            return kind;
    }
    return std::nullopt;
}

bool ModelData::empty() const noexcept
{
    return catalogs.empty() && blocks.empty() && courses.empty() && objects.empty() && paths.empty() &&
           pathways.empty() && portfolios.empty() && meta.empty();
}

std::string outcome_ref(std::string_view course, std::string_view outcome)
{
    std::string ref(course);
    ref += '/';
    ref += outcome;
    return ref;
}

bool competency_id_less(std::string_view a, std::string_view b)
{
    while (!a.empty() && !b.empty()) {
        const auto da = a.find('.');
        const auto db = b.find('.');
        const std::string_view pa = a.substr(0, da);
        const std::string_view pb = b.substr(0, db);
        long na = 0, nb = 0;
        const auto ra = std::from_chars(pa.data(), pa.data() + pa.size(), na);
        const auto rb = std::from_chars(pb.data(), pb.data() + pb.size(), nb);
        const bool numa = ra.ec == std::errc{} && ra.ptr == pa.data() + pa.size();
        const bool numb = rb.ec == std::errc{} && rb.ptr == pb.data() + pb.size();
        if (numa && numb) {
            if (na != nb)
                return na < nb;
        } else if (numa != numb) {
            return numa;  // numeric components sort first
        }
        if (pa != pb)
            return pa < pb;
        a = da == std::string_view::npos ? std::string_view{} : a.substr(da + 1);
        b = db == std::string_view::npos ? std::string_view{} : b.substr(db + 1);
    }
    return a.empty() && !b.empty();
}

Draft to_draft(const ModelData& data)
{
    Draft draft;
    draft.data = data;
    for (auto& block : draft.data.blocks) {
        for (auto& c : block.competencies)
            draft.competencies.push_back(std::move(c));
        block.competencies.clear();
    }
    return draft;
}

// ---------------------------------------------------------------------------

ModelIndex::ModelIndex(const ModelData& data)
{
    for (const auto& catalog : data.catalogs) {
        for (const auto& area : catalog.areas) {
            areas.emplace(area.id, &area);
            for (const auto& topic : area.topics)
                topics.emplace(topic.id, &topic);
        }
        for (const auto& s : catalog.skills)
            skills.emplace(s.id, &s);
        for (const auto& d : catalog.dispositions)
            dispositions.emplace(d.id, &d);
    }
    for (const auto& block : data.blocks) {
        blocks.emplace(block.id, &block);
        for (const auto& c : block.competencies) {
            competencies.emplace(c.id, &c);
            competency_order.push_back(&c);
        }
    }
    for (const auto& course : data.courses) {
        courses.emplace(course.id, &course);
        for (const auto& o : course.outcomes)
            outcomes.emplace(outcome_ref(course.id, o.id), &o);
    }
    for (const auto& o : data.objects)
        objects.emplace(o.id, &o);
    for (const auto& p : data.paths)
        paths.emplace(p.id, &p);
    for (const auto& p : data.pathways)
        pathways.emplace(p.id, &p);
    for (const auto& p : data.portfolios)
        portfolios.emplace(p.student, &p);
}

Model::Model() : Model(ModelData{}) {}

Model::Model(ModelData data) : data_(std::make_shared<const ModelData>(std::move(data)))
{
    index_ = std::make_shared<const ModelIndex>(*data_);
}

namespace {

template <class Map, class Key>
auto lookup(const Map& map, const Key& key) -> typename Map::mapped_type
{
    auto it = map.find(key);
    return it == map.end() ? nullptr : it->second;
}

}  // namespace

const Topic* Model::find_topic(std::string_view id) const { return lookup(index_->topics, id); }
const KnowledgeArea* Model::find_area(std::string_view id) const { return lookup(index_->areas, id); }
const Competency* Model::find_competency(std::string_view id) const { return lookup(index_->competencies, id); }
const CompetencyBlock* Model::find_block(int id) const { return lookup(index_->blocks, id); }
const Course* Model::find_course(std::string_view id) const { return lookup(index_->courses, id); }
const LearningOutcome* Model::find_outcome(std::string_view ref) const { return lookup(index_->outcomes, ref); }
const Pathway* Model::find_pathway(std::string_view id) const { return lookup(index_->pathways, id); }
const StudentPortfolio* Model::find_portfolio(std::string_view student) const
{
    return lookup(index_->portfolios, student);
}
bool Model::has_skill(std::string_view id) const { return index_->skills.contains(id); }
bool Model::has_disposition(std::string_view id) const { return index_->dispositions.contains(id); }

std::vector<const Competency*> Model::competencies() const { return index_->competency_order; }

std::size_t Model::competency_count() const noexcept { return index_->competencies.size(); }
std::size_t Model::area_count() const noexcept { return index_->areas.size(); }
std::size_t Model::topic_count() const noexcept { return index_->topics.size(); }
std::size_t Model::skill_count() const noexcept { return index_->skills.size(); }
std::size_t Model::disposition_count() const noexcept { return index_->dispositions.size(); }

}  // namespace cforge
