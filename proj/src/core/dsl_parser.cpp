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

#include "cforge/dsl.hpp"

#include "dsl_lexer.hpp"
#include "span_keys.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace cforge {

namespace {

using dsl::Token;
using dsl::TokenKind;

bool is_top_level_keyword(std::string_view w)
{
    static const std::set<std::string_view> kws = {"catalog", "block",   "competency", "course", "object",
                                                   "path",    "pathway", "portfolio",  "meta"};
    return kws.contains(w);
}

struct Abort {};

class Parser {
public:
    Parser(std::vector<Token> tokens, Draft& draft, Diagnostics& diags)
        : toks_(std::move(tokens)), draft_(draft), diags_(diags)
    {
    }

    void parse_file()
    {
        while (peek().kind != TokenKind::end) {
            const Token& t = peek();
            try {
                if (t.kind == TokenKind::word && is_top_level_keyword(t.text)) {
                    declaration();
                } else {
                    fail(t, "expected a declaration, found " + show(t));
                }
            } catch (const Abort&) {
                sync();
            }
        }
    }

    // -- delta fragments ----------------------------------------------------

    void parse_delta(WhatIfDelta& delta)
    {
        while (peek().kind != TokenKind::end) {
            try {
                const Token& t = peek();
                if (is_word(t, "create")) {
                    next();
                    OutcomeCreation c;
                    const Token ref = expect_id("outcome reference");
                    split_outcome_ref(ref, c.course, c.outcome);
                    if (peek().kind == TokenKind::string)
                        c.statement = next().text;
                    c.span = ref.span;
                    delta.creations.push_back(std::move(c));
                } else if (is_word(t, "add") || is_word(t, "remove")) {
                    const bool add = t.text == "add";
                    next();
                    TargetEdit e;
                    const Token ref = expect_id("outcome reference");
                    split_outcome_ref(ref, e.course, e.outcome);
                    expect_keyword("targets");
                    e.topic = expect_id("topic id").text;
                    e.level = bloom();
                    e.span = ref.span;
                    (add ? delta.additions : delta.removals).push_back(std::move(e));
                } else {
                    fail(t, "expected 'create', 'add' or 'remove', found " + show(t));
                }
            } catch (const Abort&) {
                while (peek().kind != TokenKind::end && !is_word(peek(), "create") && !is_word(peek(), "add") &&
                       !is_word(peek(), "remove"))
                    next();
            }
        }
    }

private:
    // -- token helpers --------------------------------------------------------

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

    const Token& next()
    {
        const Token& t = toks_[pos_];
        if (t.kind == TokenKind::lbrace)
            ++depth_;
        else if (t.kind == TokenKind::rbrace && depth_ > 0)
            --depth_;
        if (pos_ + 1 < toks_.size())
            ++pos_;
        return t;
    }

    static bool is_word(const Token& t, std::string_view w) { return t.kind == TokenKind::word && t.text == w; }

    static std::string show(const Token& t)
    {
        if (t.kind == TokenKind::end)
            return "end of input";
        if (t.kind == TokenKind::string)
            return "string " + dsl::quote(t.text);
        return "'" + t.text + "'";
    }

    [[noreturn]] void fail(const Token& at, std::string message, std::string_view code = codes::parse)
    {
        diags_.push_back(Diagnostic::error(code, std::move(message), at.span));
        throw Abort{};
    }

    const Token& expect(TokenKind kind, std::string_view what)
    {
        if (peek().kind != kind)
            fail(peek(), "expected " + std::string(what) + ", found " + show(peek()));
        return next();
    }

    void expect_keyword(std::string_view kw)
    {
        if (!is_word(peek(), kw))
            fail(peek(), "expected '" + std::string(kw) + "', found " + show(peek()));
        next();
    }

    /// Identifiers may be bare words, numbers ("1.1") or quoted strings.
    Token expect_id(std::string_view what)
    {
        const Token& t = peek();
        if (t.kind != TokenKind::word && t.kind != TokenKind::number && t.kind != TokenKind::string)
            fail(t, "expected " + std::string(what) + ", found " + show(t));
        if (t.text.empty())
            fail(t, "empty " + std::string(what));
        return next();
    }

    std::string expect_string(std::string_view what) { return expect(TokenKind::string, what).text; }

    int expect_int(std::string_view what)
    {
        const Token& t = expect(TokenKind::number, what);
        int value = 0;
        const auto r = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (r.ec != std::errc{} || r.ptr != t.text.data() + t.text.size())
            fail(t, std::string(what) + " must be an integer", codes::bad_value);
        return value;
    }

    double expect_number(std::string_view what)
    {
        const Token& t = expect(TokenKind::number, what);
        double value = 0;
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        return value;
    }

    BloomLevel bloom()
    {
        expect(TokenKind::at, "'@'");
        const Token& t = peek();
        if (t.kind == TokenKind::end || t.kind == TokenKind::lbrace || t.kind == TokenKind::rbrace)
            fail(t, "expected a Bloom level (A1, A2, B1, B2, C1, C2), found " + show(t), codes::bad_bloom);
        next();
        if (auto level = parse_bloom(t.text); level && t.kind == TokenKind::word)
            return *level;
        diags_.push_back(Diagnostic::error(
            codes::bad_bloom, "'" + t.text + "' is not a Bloom level (A1, A2, B1, B2, C1, C2)", t.span));
        return BloomLevel::A1;
    }

    void reject_skill_level()
    {
        if (peek().kind == TokenKind::at) {
            const Token at = next();
            if (peek().kind == TokenKind::word || peek().kind == TokenKind::number)
                next();
            diags_.push_back(Diagnostic::error(
                codes::parse, "proficiency levels on skills and dispositions are reserved and not supported", at.span));
        }
    }

    /// Records where an element was declared; a second declaration under the
    /// same key is a duplicate.
    void record(const std::string& key, const Token& at, std::string_view what)
    {
        auto [it, inserted] = draft_.spans.emplace(key, at.span);
        if (!inserted) {
            diags_.push_back(Diagnostic::error(
                codes::dup_id,
                std::string(what) + " '" + at.text + "' already declared at " + it->second.file + ":" +
                    std::to_string(it->second.line_start),
                at.span));
        }
    }

    void note(const std::string& key, const Token& at) { draft_.spans.emplace(key, at.span); }

    /// Parses `{ item* }`, handing each leading word to `item`. Words the
    /// handler does not know are skipped to the end of their line with a
    /// warning.
    template <class Handler>
    void body(Handler&& item)
    {
        expect(TokenKind::lbrace, "'{'");
        for (;;) {
            const Token& t = peek();
            if (t.kind == TokenKind::rbrace) {
                next();
                return;
            }
            if (t.kind == TokenKind::end)
                fail(t, "unexpected end of input, missing '}'");
            if (t.kind != TokenKind::word)
                fail(t, "expected an attribute, found " + show(t));
            if (!item(t.text))
                unknown_attribute();
        }
    }

    void unknown_attribute()
    {
        const Token name = next();
        draft_.warnings.push_back(
            Diagnostic::warning(codes::unknown_attr, "unknown attribute '" + name.text + "' ignored", name.span));
        const int line = name.span.line_start;
        while (peek().kind != TokenKind::end && peek().kind != TokenKind::rbrace && peek().span.line_start == line) {
            if (peek().kind == TokenKind::lbrace) {
                const int start = depth_;
                next();
                while (peek().kind != TokenKind::end && depth_ > start)
                    next();
            } else {
                next();
            }
        }
    }

    void sync()
    {
        while (peek().kind != TokenKind::end) {
            if (depth_ == 0 && peek().kind == TokenKind::word && is_top_level_keyword(peek().text))
                return;
            next();
        }
    }

    void split_outcome_ref(const Token& t, std::string& course, std::string& outcome)
    {
        const auto slash = t.text.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == t.text.size())
            fail(t, "outcome reference '" + t.text + "' must have the form <course-id>/<outcome-id>");
        course = t.text.substr(0, slash);
        outcome = t.text.substr(slash + 1);
    }

    // -- declarations ---------------------------------------------------------

    void declaration()
    {
        const std::string kw = peek().text;
        next();
        if (kw == "catalog")
            catalog();
        else if (kw == "block")
            block();
        else if (kw == "competency")
            competency(std::nullopt);
        else if (kw == "course")
            course();
        else if (kw == "object")
            object();
        else if (kw == "path")
            path();
        else if (kw == "pathway")
            pathway();
        else if (kw == "portfolio")
            portfolio();
        else
            meta();
    }

    void meta()
    {
        const Token key = expect(TokenKind::string, "meta key");
        const std::string value = expect_string("meta value");
        record("meta:" + key.text, key, "meta key");
        draft_.data.meta.emplace(key.text, value);
    }

    void catalog()
    {
        const Token name = expect(TokenKind::string, "catalog name");
        Catalog cat;
        cat.name = name.text;
        if (is_word(peek(), "version")) {
            next();
            cat.version = expect_string("catalog version");
        }
        note(keys::catalog(draft_.data.catalogs.size()), name);
        body([&](const std::string& w) {
            if (w == "area") {
                next();
                cat.areas.push_back(area());
            } else if (w == "skill") {
                next();
                const Token id = expect_id("skill id");
                cat.skills.push_back({id.text, expect_string("skill title")});
                record(keys::skill(id.text), id, "skill");
            } else if (w == "disposition") {
                next();
                const Token id = expect_id("disposition id");
                cat.dispositions.push_back({id.text, expect_string("disposition title")});
                record(keys::disposition(id.text), id, "disposition");
            } else {
                return false;
            }
            return true;
        });
        draft_.data.catalogs.push_back(std::move(cat));
    }

    KnowledgeArea area()
    {
        const Token id = expect_id("area id");
        KnowledgeArea a;
        a.id = id.text;
        a.title = expect_string("area title");
        if (is_word(peek(), "category")) {
            next();
            a.category = expect_string("area category");
        }
        record(keys::area(a.id), id, "knowledge area");
        body([&](const std::string& w) {
            if (w != "topic")
                return false;
            next();
            const Token slug = expect_id("topic id");
            Topic t{a.id + "/" + slug.text, expect_string("topic title")};
            Token shown = slug;
            shown.text = t.id;
            record(keys::topic(t.id), shown, "topic");
            a.topics.push_back(std::move(t));
            return true;
        });
        return a;
    }

    void block()
    {
        const Token id_tok = peek();
        const int id = expect_int("block number");
        CompetencyBlock b;
        b.id = id;
        b.title = expect_string("block title");
        record(keys::block(id), id_tok, "block");
        draft_.data.blocks.push_back(std::move(b));
        if (peek().kind == TokenKind::lbrace) {
            body([&](const std::string& w) {
                if (w != "competency")
                    return false;
                next();
                competency(id);
                return true;
            });
        }
    }

    /// `enclosing` is the block number when nested inside a block body.
    void competency(std::optional<int> enclosing)
    {
        const Token id = expect_id("competency id");
        Competency c;
        c.id = id.text;
        if (peek().kind == TokenKind::string)
            c.statement = next().text;
        const auto key = keys::competency(c.id);
        if (is_word(peek(), "in")) {
            next();
            expect_keyword("block");
            const Token num = peek();
            c.block = expect_int("block number");
            note(keys::competency_block(c.id), num);
            if (enclosing && *enclosing != c.block) {
                diags_.push_back(Diagnostic::error(codes::bad_block,
                                                   "competency '" + c.id + "' declared inside block " +
                                                       std::to_string(*enclosing) + " names block " +
                                                       std::to_string(c.block),
                                                   num.span));
            }
        } else if (enclosing) {
            c.block = *enclosing;
        } else {
            fail(peek(), "expected 'in block <n>' after competency '" + c.id + "'");
        }
        record(key, id, "competency");
        body([&](const std::string& w) {
            if (w == "requires") {
                next();
                const Token topic = expect_id("topic id");
                note(keys::requirement(key, c.topic_reqs.size()), topic);
                c.topic_reqs.push_back({topic.text, bloom()});
            } else if (w == "skill") {
                next();
                const Token s = expect_id("skill id");
                note(keys::owner_skill(key, s.text), s);
                c.skill_reqs.insert(s.text);
                reject_skill_level();
            } else if (w == "disposition") {
                next();
                const Token d = expect_id("disposition id");
                note(keys::owner_disposition(key, d.text), d);
                c.disposition_reqs.insert(d.text);
                reject_skill_level();
            } else if (w == "statement") {
                next();
                c.statement = expect_string("statement");
            } else {
                return false;
            }
            return true;
        });
        draft_.competencies.push_back(std::move(c));
    }

    void course()
    {
        const Token id = expect_id("course id");
        Course c;
        c.id = id.text;
        c.title = expect_string("course title");
        c.year = 0;  // absent year is reported by validation
        record(keys::course(c.id), id, "course");
        body([&](const std::string& w) {
            if (w == "year") {
                next();
                c.year = expect_int("year");
            } else if (w == "ects") {
                next();
                c.ects = expect_number("ECTS credits");
            } else if (w == "outcome") {
                next();
                c.outcomes.push_back(outcome(c.id));
            } else if (w == "path") {
                next();
                const Token p = expect_id("path id");
                note(keys::course_path(c.id, p.text), p);
                c.paths.push_back(p.text);
            } else {
                return false;
            }
            return true;
        });
        draft_.data.courses.push_back(std::move(c));
    }

    LearningOutcome outcome(const std::string& course_id)
    {
        const Token id = expect_id("outcome id");
        LearningOutcome o;
        o.id = id.text;
        if (peek().kind == TokenKind::string)
            o.statement = next().text;
        const auto key = keys::outcome(course_id, o.id);
        record(key, id, "outcome");
        body([&](const std::string& w) {
            if (w == "targets") {
                next();
                const Token topic = expect_id("topic id");
                note(keys::requirement(key, o.targets.size()), topic);
                o.targets.push_back({topic.text, bloom()});
            } else if (w == "skill") {
                next();
                const Token s = expect_id("skill id");
                note(keys::owner_skill(key, s.text), s);
                o.skills_exercised.insert(s.text);
                reject_skill_level();
            } else if (w == "disposition") {
                next();
                const Token d = expect_id("disposition id");
                note(keys::owner_disposition(key, d.text), d);
                o.dispositions_exercised.insert(d.text);
                reject_skill_level();
            } else if (w == "statement") {
                next();
                o.statement = expect_string("statement");
            } else {
                return false;
            }
            return true;
        });
        return o;
    }

    void object()
    {
        const Token id = expect_id("learning object id");
        LearningObject obj;
        obj.id = id.text;
        obj.title = expect_string("learning object title");
        record(keys::object(obj.id), id, "learning object");
        body([&](const std::string& w) {
            if (w == "content") {
                next();
                obj.content_ref = expect_string("content reference");
            } else if (w == "assessment") {
                next();
                obj.assessments.push_back(assessment(obj.id));
            } else {
                return false;
            }
            return true;
        });
        draft_.data.objects.push_back(std::move(obj));
    }

    Assessment assessment(const std::string& object_id)
    {
        const Token kind = expect(TokenKind::word, "assessment kind");
        Assessment a;
        if (auto k = parse_assessment_kind(kind.text)) {
            a.kind = *k;
        } else {
            diags_.push_back(Diagnostic::error(
                codes::bad_value, "'" + kind.text + "' is not an assessment kind (diagnostic, formative, summative)",
                kind.span));
        }
        const Token id = expect_id("assessment id");
        a.id = id.text;
        const auto key = keys::assessment(object_id, a.id);
        record(key, id, "assessment");
        body([&](const std::string& w) {
            if (w != "outcome")
                return false;
            next();
            const Token ref = expect_id("outcome reference");
            note(keys::assessment_ref(key, ref.text), ref);
            a.outcome_refs.insert(ref.text);
            return true;
        });
        return a;
    }

    void path()
    {
        const Token id = expect_id("path id");
        LearningPath p;
        p.id = id.text;
        record(keys::path(p.id), id, "learning path");
        body([&](const std::string& w) {
            if (w != "stage")
                return false;
            next();
            std::vector<std::string> stage;
            expect(TokenKind::lbrace, "'{'");
            while (peek().kind != TokenKind::rbrace) {
                const Token obj = expect_id("learning object id");
                note(keys::path_object(p.id, obj.text), obj);
                stage.push_back(obj.text);
                if (peek().kind == TokenKind::comma)
                    next();
            }
            next();
            p.stages.push_back(std::move(stage));
            return true;
        });
        draft_.data.paths.push_back(std::move(p));
    }

    void pathway()
    {
        const Token id = expect_id("pathway id");
        Pathway p;
        p.id = id.text;
        p.title = expect_string("pathway title");
        record(keys::pathway(p.id), id, "pathway");
        body([&](const std::string& w) {
            if (w != "emphasizes")
                return false;
            next();
            do {
                if (peek().kind == TokenKind::comma)
                    next();
                const Token num = peek();
                const int b = expect_int("block number");
                note(keys::pathway_block(p.id, b), num);
                p.emphasized_blocks.insert(b);
            } while (peek().kind == TokenKind::number || peek().kind == TokenKind::comma);
            return true;
        });
        draft_.data.pathways.push_back(std::move(p));
    }

    void portfolio()
    {
        const Token student = expect_id("student id");
        StudentPortfolio p;
        p.student = student.text;
        record(keys::portfolio(p.student), student, "portfolio");
        body([&](const std::string& w) {
            if (w != "achievement")
                return false;
            next();
            p.records.push_back(achievement(p.student));
            return true;
        });
        draft_.data.portfolios.push_back(std::move(p));
    }

    AchievementRecord achievement(const std::string& student)
    {
        const Token id = expect_id("achievement id");
        AchievementRecord r;
        r.id = id.text;
        r.student = student;
        r.title = expect_string("achievement title");
        const auto key = keys::achievement(student, r.id);
        record(key, id, "achievement");
        body([&](const std::string& w) {
            if (w == "created") {
                next();
                r.created = expect_id("creation date").text;
            } else if (w == "revisions") {
                next();
                r.revisions = expect_int("revision count");
            } else if (w == "links") {
                next();
                LinkedSpec spec;
                if (is_word(peek(), "competency")) {
                    spec.kind = LinkKind::competency;
                } else if (is_word(peek(), "outcome")) {
                    spec.kind = LinkKind::outcome;
                } else {
                    fail(peek(), "expected 'competency' or 'outcome', found " + show(peek()));
                }
                next();
                const Token ref = expect_id("linked id");
                note(keys::link(key, r.linked_specs.size()), ref);
                spec.ref = ref.text;
                spec.level = bloom();
                r.linked_specs.push_back(std::move(spec));
            } else {
                return false;
            }
            return true;
        });
        return r;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    Draft& draft_;
    Diagnostics& diags_;
};

}  // namespace

ParseResult parse(const SourceSet& sources)
{
    std::vector<const SourceFile*> files;
    files.reserve(sources.size());
    for (const auto& f : sources)
        files.push_back(&f);
    std::stable_sort(files.begin(), files.end(),
                     [](const SourceFile* a, const SourceFile* b) { return a->name < b->name; });

    ParseResult result;
    Draft draft;
    Diagnostics errors;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (i > 0 && files[i]->name == files[i - 1]->name) {
            errors.push_back(Diagnostic::error(codes::dup_id, "source file '" + files[i]->name + "' given twice",
                                               SourceSpan{files[i]->name, 1, 1, 1, 1}));
            continue;
        }
        auto tokens = dsl::tokenize(files[i]->text, files[i]->name, errors);
        Parser(std::move(tokens), draft, errors).parse_file();
    }
    if (has_errors(errors)) {
        result.diagnostics = std::move(errors);
        return result;
    }
    result.diagnostics = draft.warnings;
    result.draft = std::move(draft);
    return result;
}

DeltaParseResult parse_delta(std::string_view text, std::string_view file_name)
{
    DeltaParseResult result;
    Diagnostics errors;
    const std::string file(file_name);
    auto tokens = dsl::tokenize(text, file, errors);
    Draft scratch;
    WhatIfDelta delta;
    Parser(std::move(tokens), scratch, errors).parse_delta(delta);
    if (has_errors(errors)) {
        result.diagnostics = std::move(errors);
        return result;
    }
    result.delta = std::move(delta);
    return result;
}

}  // namespace cforge
