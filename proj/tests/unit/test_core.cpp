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
#include "cforge/diagnostic.hpp"
#include "cforge/fraction.hpp"
#include "cforge/model.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cforge;
using namespace cforge::testing;

TEST_CASE("bloom levels have six ordered ranks")
{
    CHECK(kAllBloomLevels.size() == 6);
    const char* codes[] = {"A1", "A2", "B1", "B2", "C1", "C2"};
    for (int i = 0; i < 6; ++i) {
        CHECK(rank(kAllBloomLevels[i]) == i + 1);
        CHECK(to_string(kAllBloomLevels[i]) == codes[i]);
        CHECK(parse_bloom(codes[i]) == kAllBloomLevels[i]);
    }
    CHECK(bloom_label(BloomLevel::A1) == "Remembering");
    CHECK(bloom_label(BloomLevel::C2) == "Creating");
    for (const char* bad : {"", "Z9", "a1", "A0", "C3", "A1 ", "B"})
        CHECK_FALSE(parse_bloom(bad).has_value());
}

TEST_CASE("bloom_geq examples")
{
    CHECK(bloom_geq(BloomLevel::B1, BloomLevel::A2));
    CHECK(bloom_geq(BloomLevel::A1, BloomLevel::A1));
    CHECK_FALSE(bloom_geq(BloomLevel::A2, BloomLevel::C2));
}

TEST_CASE("fraction arithmetic is exact")
{
    CHECK(Fraction(2, 4) == Fraction(1, 2));
    CHECK(Fraction(0, 7) == Fraction());
    CHECK(Fraction(2, 4).num() == 1);
    CHECK(Fraction(2, 4).den() == 2);
    CHECK(Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2));
    CHECK(Fraction(3, 4) / 3 == Fraction(1, 4));
    CHECK(Fraction(1, 3) < Fraction(1, 2));
    CHECK(Fraction(2, 3) > Fraction(3, 5));
    CHECK_THROWS(Fraction(1, 0));
}

TEST_CASE("fraction decimal rendering rounds half up")
{
    CHECK(Fraction(1, 3).to_decimal() == "0.33");
    CHECK(Fraction(2, 3).to_decimal() == "0.67");
    CHECK(Fraction(1, 8).to_decimal() == "0.13");
    CHECK(Fraction(7805, 931).to_decimal() == "8.38");
    CHECK(Fraction(1, 1).to_decimal() == "1.00");
    CHECK(Fraction(0, 1).to_decimal() == "0.00");
    CHECK(Fraction(1, 3).to_decimal(4) == "0.3333");
}

TEST_CASE("diagnostic registry and formatting")
{
    for (auto code : {codes::parse, codes::bad_bloom, codes::bad_value, codes::dup_id, codes::dup_topic,
                      codes::dangling_ref, codes::empty_reqs, codes::bad_block, codes::unknown_id,
                      codes::delta_unresolved, codes::empty_cohort, codes::io, codes::usage, codes::unknown_attr,
                      codes::emphasis_underserved})
        CHECK(is_registered_code(code));
    CHECK_FALSE(is_registered_code("E_NOPE"));

    const auto d = Diagnostic::error(codes::dangling_ref, "unknown topic 'xx/void'", {"m.cdsl", 3, 13, 3, 19});
    CHECK(format(d) == "m.cdsl:3:13: error E_DANGLING_REF: unknown topic 'xx/void'");
    const auto w = Diagnostic::warning(codes::unknown_attr, "ignored", {"m.cdsl", 1, 2, 1, 3});
    CHECK(format(w) == "m.cdsl:1:2: warning W_UNKNOWN_ATTR: ignored");

    const Error e(codes::unknown_id, "unknown competency '9.9'");
    CHECK(e.diagnostic().code == "E_UNKNOWN_ID");
    CHECK(std::string(e.what()).find("9.9") != std::string::npos);
}

TEST_CASE("validate: empty requirement list")
{
    const auto diags = compile_errors(std::string(kMicroCatalog) + "competency \"1.1\" in block 1 { }\n");
    CHECK(has_code(diags, codes::empty_reqs));
}

TEST_CASE("validate: outcome targeting an unknown topic points at the reference")
{
    const std::string text = std::string(kMicroCatalog) +
                             "competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n"
                             "course c \"C\" {\n"
                             "  year 1\n"
                             "  outcome o { targets xx/void @ B1 }\n"
                             "}\n";
    const auto diags = compile_errors(text, "m.cdsl");
    REQUIRE(has_code(diags, codes::dangling_ref));
    const auto& d = *std::find_if(diags.begin(), diags.end(), [](const Diagnostic& x) { return x.code == codes::dangling_ref; });
    CHECK(d.span.file == "m.cdsl");
    // line of "  outcome o { targets xx/void @ B1 }" in the combined text
    const int line = static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(text.find("xx/void")), '\n')) + 1;
    CHECK(d.span.line_start == line);
    CHECK(d.span.col_start == 23);
    CHECK(d.span.col_end == 29);
}

TEST_CASE("validate: duplicate topic within one competency")
{
    const auto diags =
        compile_errors(std::string(kMicroCatalog) + "competency \"1.1\" in block 1 { requires a/t1 @ B1 requires a/t1 @ C1 }\n");
    CHECK(has_code(diags, codes::dup_topic));
}

TEST_CASE("validate: id collisions, block prefixes and dangling references")
{
    SUBCASE("duplicate competency")
    {
        const auto diags = compile_errors(std::string(kMicroCatalog) +
                                          "competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n"
                                          "competency \"1.1\" in block 1 { requires a/t2 @ B1 }\n");
        CHECK(has_code(diags, codes::dup_id));
    }
    SUBCASE("block prefix mismatch")
    {
        const auto diags = compile_errors(std::string(kMicroCatalog) +
                                          "block 2 \"Two\"\n"
                                          "competency \"2.1\" in block 1 { requires a/t1 @ B1 }\n"
                                          "competency \"1.1\" in block 2 { requires a/t1 @ B1 }\n");
        CHECK(has_code(diags, codes::bad_block));
    }
    SUBCASE("unknown block")
    {
        const auto diags =
            compile_errors(std::string(kMicroCatalog) + "competency \"7.1\" in block 7 { requires a/t1 @ B1 }\n");
        CHECK(has_code(diags, codes::dangling_ref));
    }
    SUBCASE("unknown skill and disposition")
    {
        const auto diags = compile_errors(std::string(kMicroCatalog) +
                                          "competency \"1.1\" in block 1 { requires a/t1 @ B1 skill nope disposition nah }\n");
        CHECK(std::count_if(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.code == codes::dangling_ref; }) == 2);
    }
    SUBCASE("empty block")
    {
        const auto diags = compile_errors(std::string(kMicroCatalog) +
                                          "block 2 \"Empty\"\n"
                                          "competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n");
        CHECK(has_code(diags, codes::bad_value));
    }
    SUBCASE("pathway emphasizing an unknown block")
    {
        const auto diags = compile_errors(std::string(kMicroCatalog) +
                                          "competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n"
                                          "pathway p \"P\" { emphasizes 1, 4 }\n");
        CHECK(has_code(diags, codes::dangling_ref));
    }
}

TEST_CASE("validate: teaching-side structure")
{
    const std::string base = std::string(kMicroCatalog) +
                             "competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n"
                             "course c \"C\" { year 1 outcome o { targets a/t1 @ B1 } path p }\n";
    SUBCASE("year out of range")
    {
        CHECK(has_code(compile_errors(std::string(kMicroCatalog) +
                                      "competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n"
                                      "course c \"C\" { year 6 outcome o { targets a/t1 @ B1 } }\n"),
                       codes::bad_value));
    }
    SUBCASE("outcome without targets")
    {
        CHECK(has_code(compile_errors(std::string(kMicroCatalog) +
                                      "competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n"
                                      "course c \"C\" { year 1 outcome o { } }\n"),
                       codes::empty_reqs));
    }
    SUBCASE("learning object without assessment")
    {
        CHECK(has_code(compile_errors(base + "object x \"X\" { content \"c\" }\npath p { stage { x } }\n"),
                       codes::bad_value));
    }
    SUBCASE("assessment of an unknown outcome")
    {
        CHECK(has_code(compile_errors(base + "object x \"X\" { assessment summative e { outcome c/zz } }\n"
                                             "path p { stage { x } }\n"),
                       codes::dangling_ref));
    }
    SUBCASE("object repeated within a path")
    {
        CHECK(has_code(compile_errors(base + "object x \"X\" { assessment formative e { outcome c/o } }\n"
                                             "path p { stage { x } stage { x } }\n"),
                       codes::dup_id));
    }
    SUBCASE("course referencing an unknown path")
    {
        CHECK(has_code(compile_errors(base), codes::dangling_ref));
    }
    SUBCASE("valid structure")
    {
        const Model m = compile_text(base + "object x \"X\" { assessment diagnostic e { outcome c/o } }\n"
                                            "path p { stage { x } }\n");
        CHECK(m.find_outcome("c/o") != nullptr);
    }
}

TEST_CASE("validate: portfolio records")
{
    const std::string base = std::string(kMicroCatalog) + "competency \"1.1\" in block 1 { requires a/t1 @ B1 }\n";
    CHECK(has_code(compile_errors(base + "portfolio s { achievement r \"R\" { created \"2025-13-01\" revisions 1 } }\n"),
                   codes::bad_value));
    CHECK(has_code(compile_errors(base + "portfolio s { achievement r \"R\" { created \"2025-01-01\" revisions 0 } }\n"),
                   codes::bad_value));
    CHECK(has_code(compile_errors(base + "portfolio s { achievement r \"R\" { created \"2025-01-01\" revisions 1 "
                                         "links competency \"4.4\" @ B1 } }\n"),
                   codes::dangling_ref));
    CHECK(has_code(compile_errors(base + "portfolio s { achievement r \"R\" { created \"2025-01-01\" }\n"
                                         "achievement r \"R2\" { created \"2025-01-02\" } }\n"),
                   codes::dup_id));
}

TEST_CASE("validate reports every problem, in source order, without throwing")
{
    const std::string text = std::string(kMicroCatalog) +
                             "competency \"1.1\" in block 1 { requires a/zz @ B1 }\n"
                             "competency \"1.2\" in block 1 { }\n"
                             "competency \"1.3\" in block 1 { requires a/t1 @ B1 requires a/t1 @ B2 }\n";
    const auto diags = compile_errors(text);
    CHECK(diags.size() >= 3);
    CHECK(has_code(diags, codes::dangling_ref));
    CHECK(has_code(diags, codes::empty_reqs));
    CHECK(has_code(diags, codes::dup_topic));
    for (std::size_t i = 1; i < diags.size(); ++i)
        CHECK(diags[i - 1].span.line_start <= diags[i].span.line_start);
}

TEST_CASE("model lookups and canonical competency order")
{
    const Model m = micro("competency \"1.10\" in block 1 { requires a/t1 @ B1 }\n"
                          "competency \"1.2\" in block 1 { requires a/t2 @ B1 }\n"
                          "competency \"1.1\" in block 1 { requires a/t3 @ B1 skill s1 }\n");
    std::vector<std::string> ids;
    for (const Competency* c : m.competencies())
        ids.push_back(c->id);
    CHECK(ids == std::vector<std::string>{"1.1", "1.2", "1.10"});
    CHECK(competency_id_less("1.2", "1.10"));
    CHECK_FALSE(competency_id_less("1.10", "1.2"));
    CHECK(m.find_topic("a/t1") != nullptr);
    CHECK(m.find_topic("a/t9") == nullptr);
    CHECK(m.find_area("a")->topics.size() == 4);
    CHECK(m.find_block(1)->competencies.size() == 3);
    CHECK(m.has_skill("s1"));
    CHECK_FALSE(m.has_disposition("s1"));
    CHECK(m.competency_count() == 3);
    CHECK(m.topic_count() == 4);
}

TEST_CASE("validate is idempotent on a valid model")
{
    const Model& m = fixture_model();
    const ValidationResult again = validate(m.data());
    REQUIRE(again.ok());
    CHECK(*again.model == m);
}

TEST_CASE("empty input yields the empty model")
{
    const LoadResult r = compile({});
    REQUIRE(r.ok());
    CHECK(r.model->empty());
    CHECK(r.diagnostics.empty());
}

TEST_CASE("fixture has the program's published shape")
{
    const Model& m = fixture_model();
    CHECK(m.data().blocks.size() == 5);
    CHECK(m.competency_count() == 23);
    CHECK(m.area_count() == 34);
    CHECK(m.topic_count() == 494);
    CHECK(m.skill_count() == 13);
    CHECK(m.disposition_count() == 11);
    const std::size_t sizes[] = {5, 5, 5, 5, 3};
    for (std::size_t b = 0; b < 5; ++b)
        CHECK(m.data().blocks[b].competencies.size() == sizes[b]);
    REQUIRE(m.find_competency("1.1") != nullptr);
    CHECK(m.find_competency("1.1")->statement ==
          "Design software solutions meeting functional and non-functional requirements");
    CHECK(m.find_competency("5.3")->statement == "Lead international IT project teams with quality and ethics");
    REQUIRE(m.find_area("sw-design") != nullptr);
    CHECK(m.find_area("sw-design")->category == "SW Development");
    CHECK(m.find_topic("sw-design/arch-patterns") != nullptr);
}
