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

#include "cli.hpp"

#include "client.hpp"
#include "render.hpp"
#include "service.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace cforge::cli {

namespace {

constexpr int kDefaultPort = 8080;

struct Options {
    std::string dir;
    bool json = false;
    bool strict_fpk = false;
    std::string competency;
    std::string topic;
    bool matrix = false;
    std::string id;
    std::string delta;
    std::string format;
    std::string out_dir;
    int port = -1;
    std::string host = "127.0.0.1";
};

using Printer = std::function<void(std::ostream&, const json&)>;

/// Writes a reply the way the user asked for and maps it to an exit code.
class Emitter {
public:
    Emitter(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    int failure(const json& diagnostics, int code = kExitDiagnostics)
    {
        if (o_.json)
            out_ << render(diagnostics);
        else
            print_diagnostics(err_, diagnostics);
        return code;
    }

    int emit(const Reply& r, const Printer& human)
    {
        if (!r.ok())
            return failure(r.doc, r.status == CFORGE_E_INVALID_ARGUMENT ? kExitUsage : kExitDiagnostics);
        if (o_.json)
            out_ << render(r.doc);
        else
            human(out_, r.doc);
        return kExitOk;
    }

private:
    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

int usage(std::ostream& err, const std::string& message)
{
    err << "error: " << message << "\nRun with --help for more information.\n";
    return kExitUsage;
}

int default_port(std::ostream& err, int& port)
{
    const char* env = std::getenv("CFORGE_PORT");
    if (env == nullptr || *env == '\0') {
        port = kDefaultPort;
        return kExitOk;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 65535)
        return usage(err, std::string("CFORGE_PORT: '") + env + "' is not a port number");
    port = static_cast<int>(v);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Competency-model compiler, analyzer and query service.", "cforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cforge_version()));

    auto common = [&](CLI::App* sub, bool strict) {
        sub->add_option("dir", o.dir, "Model directory (.cdsl files or model.json)")->required();
        sub->add_flag("--json", o.json, "Print interchange JSON instead of tables");
        if (strict)
            sub->add_flag("--strict-fpk", o.strict_fpk,
                          "Count skills/dispositions only from courses teaching the competency's topics");
    };

    CLI::App* validate = app.add_subcommand("validate", "Parse and validate a model");
    common(validate, false);

    CLI::App* coverage = app.add_subcommand("coverage", "Competency coverage reports");
    common(coverage, true);
    auto* comp_opt = coverage->add_option("--competency", o.competency, "Report a single competency");
    coverage->add_flag("--matrix", o.matrix, "Competency x course matrix")->excludes(comp_opt);

    CLI::App* trace = app.add_subcommand("trace", "Topic/competency traceability");
    common(trace, false);
    auto* topic_opt = trace->add_option("--topic", o.topic, "Competencies requiring a topic");
    trace->add_option("--competency", o.competency, "Topics, outcomes and courses of a competency")
        ->excludes(topic_opt);

    CLI::App* gaps = app.add_subcommand("gaps", "Unsatisfied requirements, untaught and orphan topics");
    common(gaps, true);

    CLI::App* pathway = app.add_subcommand("pathway", "Per-block coverage profile of a pathway");
    common(pathway, true);
    pathway->add_option("--id", o.id, "Pathway id")->required();

    CLI::App* whatif = app.add_subcommand("whatif", "Preview the effect of outcome edits");
    common(whatif, true);
    whatif->add_option("--delta", o.delta, "Delta file (.cdsl fragment or .json)")->required();

    CLI::App* stats = app.add_subcommand("stats", "Cohort statistics over the portfolios");
    common(stats, false);

    CLI::App* exporter = app.add_subcommand("export", "Export the model");
    common(exporter, false);
    exporter->add_option("--format", o.format, "dsl, json, wiki or dot")
        ->required()
        ->check(CLI::IsMember({"dsl", "json", "wiki", "dot"}));
    exporter->add_option("--out", o.out_dir, "Output directory")->required();

    CLI::App* serve = app.add_subcommand("serve", "Run the HTTP query service");
    serve->add_option("dir", o.dir, "Model directory")->required();
    serve->add_option("--port", o.port, "TCP port (default: $CFORGE_PORT or 8080)")->check(CLI::Range(0, 65535));
    serve->add_option("--host", o.host, "Bind address (default: loopback)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (trace->parsed() && o.topic.empty() == o.competency.empty())
        return usage(err, "trace: give exactly one of --topic or --competency");

    Emitter emitter(o, out, err);
    Loaded loaded = load_model(o.dir);
    if (!loaded.model)
        return emitter.failure(loaded.reply.doc);
    if (!o.json || serve->parsed())
        print_diagnostics(err, loaded.reply.doc);  // warnings
    const cforge_model* m = loaded.model.get();
    const int strict = o.strict_fpk ? 1 : 0;

    if (validate->parsed()) {
        Reply summary = call(cforge_model_summary, m);
        if (o.json) {
            out << render({{"summary", summary.doc}, {"diagnostics", loaded.reply.doc.at("diagnostics")}});
        } else {
            out << summary.doc.at("competencies").get<int>() << " competencies, " << summary.doc.at("blocks").get<int>()
                << " blocks, " << summary.doc.at("topics").get<int>() << " topics OK\n";
        }
        return kExitOk;
    }

    if (coverage->parsed()) {
        if (o.matrix)
            return emitter.emit(call(cforge_coverage_matrix, m), print_matrix);
        if (!o.competency.empty())
            return emitter.emit(call(cforge_coverage, m, o.competency.c_str(), strict), print_coverage);
        Reply list = call(cforge_competencies, m);
        json reports = json::array();
        for (const auto& c : list.doc.at("competencies")) {
            const std::string id = c.at("id").get<std::string>();
            Reply r = call(cforge_coverage, m, id.c_str(), strict);
            if (!r.ok())
                return emitter.emit(r, nullptr);
            reports.push_back(std::move(r.doc));
        }
        return emitter.emit(Reply{CFORGE_OK, {{"reports", std::move(reports)}}}, [](std::ostream& os, const json& d) {
            for (const auto& r : d.at("reports")) {
                print_coverage(os, r);
                os << '\n';
            }
        });
    }

    if (trace->parsed()) {
        if (!o.topic.empty())
            return emitter.emit(call(cforge_trace_topic, m, o.topic.c_str()), print_trace_topic);
        return emitter.emit(call(cforge_trace_competency, m, o.competency.c_str()), print_trace_competency);
    }

    if (gaps->parsed())
        return emitter.emit(call(cforge_gaps, m, strict), print_gaps);

    if (pathway->parsed())
        return emitter.emit(call(cforge_pathway_profile, m, o.id.c_str(), strict), print_pathway);

    if (whatif->parsed()) {
        std::ifstream in(o.delta, std::ios::binary);
        if (!in)
            return emitter.failure(diagnostic_document("E_IO", o.delta + ": cannot read delta file"));
        std::ostringstream text;
        text << in.rdbuf();
        const bool is_json = o.delta.size() >= 5 && o.delta.compare(o.delta.size() - 5, 5, ".json") == 0;
        return emitter.emit(
            call(cforge_whatif, m, text.str().c_str(), is_json ? CFORGE_DELTA_JSON : CFORGE_DELTA_AUTO, strict),
            print_whatif);
    }

    if (stats->parsed())
        return emitter.emit(call(cforge_cohort_stats, m), print_stats);

    if (exporter->parsed()) {
        return emitter.emit(call(cforge_export, m, o.format.c_str(), o.out_dir.c_str()),
                            [&](std::ostream& os, const json& d) {
                                os << "wrote " << d.at("files").size() << " " << o.format << " file(s) to "
                                   << o.out_dir << '\n';
                            });
    }

    if (serve->parsed()) {
        if (o.port < 0) {
            if (const int rc = default_port(err, o.port); rc != kExitOk)
                return rc;
        }
        Service service(o.dir, loaded.model);
        const int port = service.bind(o.host, o.port);
        if (port < 0) {
            return emitter.failure(diagnostic_document(
                "E_IO", "cannot bind " + o.host + ":" + std::to_string(o.port)));
        }
        out << "cforge: serving " << o.dir << " on http://" << o.host << ":" << port << std::endl;
        service.run();
        return kExitOk;
    }
    return usage(err, "no subcommand");
}

}  // namespace cforge::cli
