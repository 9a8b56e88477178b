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

#include "cli_support.hpp"

#include <json.hpp>

using namespace cforge::cli;
using namespace cforge::cli::testing;
using nlohmann::json;

namespace {

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("validate reports the model size")
{
    const CliRun r = cli({"validate", fixture()});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "23 competencies, 5 blocks, 494 topics OK\n");
    CHECK(r.err.empty());

    const CliRun j = cli({"validate", fixture(), "--json"});
    CHECK(j.code == kExitOk);
    const json doc = json::parse(j.out);
    CHECK(doc.at("summary").at("competencies") == 23);
    CHECK(doc.at("diagnostics").empty());

    const CliRun e = cli({"validate", empty_fixture()});
    CHECK(e.code == kExitOk);
    CHECK(e.out == "0 competencies, 0 blocks, 0 topics OK\n");
}

TEST_CASE("validate reports diagnostics with positions and exit code 1")
{
    ScratchDir dir;
    copy_fixture(dir.path());
    std::ofstream(dir.path() / "zz.cdsl") << "competency \"1.9\" in block 1 {\n  requires sw-design/arch-patterns @ Q3\n}\n";
    const CliRun r = cli({"validate", dir.str()});
    CHECK(r.code == kExitDiagnostics);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "zz.cdsl:2:"));
    CHECK(contains(r.err, "error E_BAD_BLOOM"));

    const CliRun j = cli({"validate", dir.str(), "--json"});
    CHECK(j.code == kExitDiagnostics);
    CHECK(json::parse(j.out).at("diagnostics").at(0).at("code") == "E_BAD_BLOOM");

    const CliRun missing = cli({"validate", dir.str() + "/nope"});
    CHECK(missing.code == kExitDiagnostics);
    CHECK(contains(missing.err, "E_IO"));
}

TEST_CASE("usage errors exit with code 2 and name the problem")
{
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"coverage"}).code == kExitUsage);

    const CliRun no_id = cli({"pathway", fixture()});
    CHECK(no_id.code == kExitUsage);
    CHECK(contains(no_id.err, "--id"));

    const CliRun bad_format = cli({"export", fixture(), "--format", "pdf", "--out", "/tmp/x"});
    CHECK(bad_format.code == kExitUsage);
    CHECK(contains(bad_format.err, "pdf"));

    CHECK(cli({"coverage", fixture(), "--competency", "1.1", "--matrix"}).code == kExitUsage);
    CHECK(cli({"trace", fixture()}).code == kExitUsage);
    CHECK(cli({"trace", fixture(), "--topic", "x/y", "--competency", "1.1"}).code == kExitUsage);
    CHECK(cli({"serve", fixture(), "--port", "70000"}).code == kExitUsage);

    const CliRun help = cli({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(contains(help.out, "whatif"));
}

TEST_CASE("coverage output")
{
    const CliRun one = cli({"coverage", fixture(), "--competency", "1.1"});
    CHECK(one.code == kExitOk);
    CHECK(contains(one.out, "sw-design/arch-patterns"));
    CHECK(contains(one.out, "4/5"));

    const CliRun all = cli({"coverage", fixture(), "--json"});
    CHECK(all.code == kExitOk);
    CHECK(json::parse(all.out).at("reports").size() == 23);

    const CliRun matrix = cli({"coverage", fixture(), "--matrix", "--json"});
    CHECK(matrix.code == kExitOk);
    CHECK(json::parse(matrix.out).at("cells").size() == 23);

    const CliRun unknown = cli({"coverage", fixture(), "--competency", "9.9"});
    CHECK(unknown.code == kExitDiagnostics);
    CHECK(contains(unknown.err, "E_UNKNOWN_ID"));

    const CliRun unknown_json = cli({"coverage", fixture(), "--competency", "9.9", "--json"});
    CHECK(unknown_json.code == kExitDiagnostics);
    CHECK(json::parse(unknown_json.out).at("diagnostics").at(0).at("code") == "E_UNKNOWN_ID");

    CHECK(cli({"coverage", empty_fixture(), "--competency", "1.1"}).code == kExitDiagnostics);
}

TEST_CASE("trace, gaps and pathway")
{
    const CliRun t = cli({"trace", fixture(), "--topic", "sw-design/arch-patterns"});
    CHECK(t.code == kExitOk);
    CHECK(contains(t.out, "1.1"));
    CHECK(contains(t.out, "4.3"));

    const CliRun back = cli({"trace", fixture(), "--competency", "1.1", "--json"});
    CHECK(back.code == kExitOk);
    CHECK(contains(back.out, "course-sw"));

    const CliRun g = cli({"gaps", fixture(), "--strict-fpk"});
    CHECK(g.code == kExitOk);
    CHECK(contains(g.out, "negotiation"));

    const CliRun p = cli({"pathway", fixture(), "--id", "data"});
    CHECK(p.code == kExitOk);
    CHECK(cli({"pathway", fixture(), "--id", "nope"}).code == kExitDiagnostics);
}

TEST_CASE("whatif reads DSL and JSON deltas alike")
{
    const CliRun dsl = cli({"whatif", fixture(), "--delta", data_file("whatif.cdsl"), "--json"});
    const CliRun js = cli({"whatif", fixture(), "--delta", data_file("whatif.json"), "--json"});
    CHECK(dsl.code == kExitOk);
    CHECK(js.code == kExitOk);
    CHECK(dsl.out == js.out);
    CHECK_FALSE(json::parse(dsl.out).at("changed").empty());

    const CliRun human = cli({"whatif", fixture(), "--delta", data_file("whatif.cdsl")});
    CHECK(human.code == kExitOk);
    CHECK(contains(human.out, "1.1"));

    const CliRun missing = cli({"whatif", fixture(), "--delta", data_file("absent.cdsl")});
    CHECK(missing.code == kExitDiagnostics);
    CHECK(contains(missing.err, "E_IO"));

    ScratchDir dir;
    std::ofstream(dir.path() / "bad.cdsl") << "add course-sw/nope targets sw-design/topic-10 @ C1\n";
    const CliRun bad = cli({"whatif", fixture(), "--delta", (dir.path() / "bad.cdsl").string()});
    CHECK(bad.code == kExitDiagnostics);
    CHECK(contains(bad.err, "E_DELTA_UNRESOLVED"));
}

TEST_CASE("stats")
{
    const CliRun s = cli({"stats", fixture()});
    CHECK(s.code == kExitOk);
    CHECK(contains(s.out, "931"));
    CHECK(contains(s.out, "7805"));
    CHECK(contains(s.out, "8.38"));

    const CliRun empty = cli({"stats", empty_fixture()});
    CHECK(empty.code == kExitDiagnostics);
    CHECK(contains(empty.err, "E_EMPTY_COHORT"));
}

TEST_CASE("export writes files that load back")
{
    ScratchDir dir;
    const CliRun r = cli({"export", fixture(), "--format", "dsl", "--out", dir.str()});
    CHECK(r.code == kExitOk);
    const CliRun v = cli({"validate", dir.str()});
    CHECK(v.code == kExitOk);
    CHECK(v.out == "23 competencies, 5 blocks, 494 topics OK\n");

    ScratchDir wiki;
    CHECK(cli({"export", fixture(), "--format", "wiki", "--out", wiki.str()}).code == kExitOk);
    CHECK(std::filesystem::exists(wiki.path() / "Competency_1.1.wiki"));
}
