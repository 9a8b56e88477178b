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

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cforge {

// ---------------------------------------------------------------------------
// Body-of-knowledge side
// ---------------------------------------------------------------------------

struct Topic {
    std::string id;  // qualified "<area-id>/<topic-slug>"
    std::string title;

    friend bool operator==(const Topic&, const Topic&) = default;
};

struct KnowledgeArea {
    std::string id;
    std::string title;
    std::optional<std::string> category;
    std::vector<Topic> topics;

    friend bool operator==(const KnowledgeArea&, const KnowledgeArea&) = default;
};

struct Skill {
    std::string id;
    std::string title;

    friend bool operator==(const Skill&, const Skill&) = default;
};

struct Disposition {
    std::string id;
    std::string title;

    friend bool operator==(const Disposition&, const Disposition&) = default;
};

struct Catalog {
    std::string name;
    std::string version;
    std::vector<KnowledgeArea> areas;
    std::vector<Skill> skills;
    std::vector<Disposition> dispositions;

    friend bool operator==(const Catalog&, const Catalog&) = default;
};

// ---------------------------------------------------------------------------
// Competency side
// ---------------------------------------------------------------------------

struct TopicRequirement {
    std::string topic;
    BloomLevel level = BloomLevel::A1;

    friend bool operator==(const TopicRequirement&, const TopicRequirement&) = default;
    friend auto operator<=>(const TopicRequirement&, const TopicRequirement&) = default;
};

/// A requirement bundle: topics at a proficiency level, plus skills and
/// dispositions that are simply required or not.
struct Competency {
    std::string id;  // dotted "<block>.<index>"
    int block = 0;
    std::string statement;
    std::vector<TopicRequirement> topic_reqs;
    std::set<std::string> skill_reqs;
    std::set<std::string> disposition_reqs;

    friend bool operator==(const Competency&, const Competency&) = default;
};

struct CompetencyBlock {
    int id = 0;
    std::string title;
    std::vector<Competency> competencies;

    friend bool operator==(const CompetencyBlock&, const CompetencyBlock&) = default;
};

// ---------------------------------------------------------------------------
// Teaching side
// ---------------------------------------------------------------------------

struct LearningOutcome {
    std::string id;  // unique within its course
    std::string statement;
    std::vector<TopicRequirement> targets;
    std::set<std::string> skills_exercised;
    std::set<std::string> dispositions_exercised;

    friend bool operator==(const LearningOutcome&, const LearningOutcome&) = default;
};

enum class AssessmentKind { diagnostic, formative, summative };

std::string_view to_string(AssessmentKind kind) noexcept;
std::optional<AssessmentKind> parse_assessment_kind(std::string_view text) noexcept;

struct Assessment {
    std::string id;
    AssessmentKind kind = AssessmentKind::formative;
    std::set<std::string> outcome_refs;  // "<course-id>/<outcome-id>"

    friend bool operator==(const Assessment&, const Assessment&) = default;
};

struct LearningObject {
    std::string id;
    std::string title;
    std::string content_ref;
    std::vector<Assessment> assessments;

    friend bool operator==(const LearningObject&, const LearningObject&) = default;
};

struct LearningPath {
    std::string id;
    std::vector<std::vector<std::string>> stages;  // object ids, in order

    friend bool operator==(const LearningPath&, const LearningPath&) = default;
};

struct Course {
    std::string id;
    std::string title;
    int year = 1;
    double ects = 0.0;  // metadata only
    std::vector<LearningOutcome> outcomes;
    std::vector<std::string> paths;

    friend bool operator==(const Course&, const Course&) = default;
};

struct Pathway {
    std::string id;
    std::string title;
    std::set<int> emphasized_blocks;

    friend bool operator==(const Pathway&, const Pathway&) = default;
};

// ---------------------------------------------------------------------------
// Student side
// ---------------------------------------------------------------------------

enum class LinkKind { competency, outcome };

struct LinkedSpec {
    LinkKind kind = LinkKind::competency;
    std::string ref;  // competency id, or "<course-id>/<outcome-id>"
    BloomLevel level = BloomLevel::A1;

    friend bool operator==(const LinkedSpec&, const LinkedSpec&) = default;
    friend auto operator<=>(const LinkedSpec&, const LinkedSpec&) = default;
};

struct AchievementRecord {
    std::string id;
    std::string student;
    std::string title;
    std::vector<LinkedSpec> linked_specs;
    int revisions = 1;
    std::string created;  // ISO-8601 date, YYYY-MM-DD

    friend bool operator==(const AchievementRecord&, const AchievementRecord&) = default;
};

struct StudentPortfolio {
    std::string student;
    std::vector<AchievementRecord> records;

    friend bool operator==(const StudentPortfolio&, const StudentPortfolio&) = default;
};

// ---------------------------------------------------------------------------
// Aggregates
// ---------------------------------------------------------------------------

/// Plain aggregate of everything a model declares. A validated instance is
/// canonical: every list is sorted by id (learning-path stages keep their
/// order) and competencies live inside their block.
struct ModelData {
    std::vector<Catalog> catalogs;
    std::vector<CompetencyBlock> blocks;
    std::vector<Course> courses;
    std::vector<LearningObject> objects;
    std::vector<LearningPath> paths;
    std::vector<Pathway> pathways;
    std::vector<StudentPortfolio> portfolios;
    std::map<std::string, std::string> meta;

    bool empty() const noexcept;

    friend bool operator==(const ModelData&, const ModelData&) = default;
};

/// Source locations of draft elements, keyed by element path.
using SpanIndex = std::map<std::string, SourceSpan>;

/// Unresolved model as produced by a front end (DSL parser, JSON reader).
/// Competencies are kept flat; `data.blocks` carry headers only.
struct Draft {
    ModelData data;
    std::vector<Competency> competencies;
    SpanIndex spans;
    Diagnostics warnings;
};

/// Flattens a model back into draft form (no spans).
Draft to_draft(const ModelData& data);

/// Orders competency ids numerically per dotted component ("1.2" < "1.10").
bool competency_id_less(std::string_view a, std::string_view b);

std::string outcome_ref(std::string_view course, std::string_view outcome);

struct ModelIndex;

/// Validated, immutable model. Only `validate` creates one; copies share the
/// underlying data.
class Model {
public:
    Model();

    const ModelData& data() const noexcept { return *data_; }
    bool empty() const noexcept { return data_->empty(); }

    const Topic* find_topic(std::string_view id) const;
    const KnowledgeArea* find_area(std::string_view id) const;
    const Competency* find_competency(std::string_view id) const;
    const CompetencyBlock* find_block(int id) const;
    const Course* find_course(std::string_view id) const;
    /// `ref` is "<course-id>/<outcome-id>".
    const LearningOutcome* find_outcome(std::string_view ref) const;
    const Pathway* find_pathway(std::string_view id) const;
    const StudentPortfolio* find_portfolio(std::string_view student) const;
    bool has_skill(std::string_view id) const;
    bool has_disposition(std::string_view id) const;

    /// Competencies across all blocks, in canonical order.
    std::vector<const Competency*> competencies() const;

    std::size_t competency_count() const noexcept;
    std::size_t area_count() const noexcept;
    std::size_t topic_count() const noexcept;
    std::size_t skill_count() const noexcept;
    std::size_t disposition_count() const noexcept;

    friend bool operator==(const Model& a, const Model& b) { return a.data() == b.data(); }

private:
    friend struct ModelBuilder;
    explicit Model(ModelData data);

    std::shared_ptr<const ModelData> data_;
    std::shared_ptr<const ModelIndex> index_;
};

struct ValidationResult {
    std::optional<Model> model;  // present iff diagnostics hold no error
    Diagnostics diagnostics;     // errors and warnings, source order

    bool ok() const noexcept { return model.has_value(); }
};

/// Resolves and checks a draft. Never throws for bad input; every problem is
/// reported as a diagnostic.
ValidationResult validate(const Draft& draft);

/// Convenience for programmatic construction (no source spans).
ValidationResult validate(const ModelData& data);

}  // namespace cforge
