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

#include "render.hpp"

#include <algorithm>
#include <iomanip>
#include <string>
#include <vector>

namespace cforge::cli {

namespace {

/// Left-aligned text table; the last column is not padded.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os, const std::string& indent = "  ") const
    {
        std::vector<std::size_t> width;
        for (const auto& r : rows_) {
            width.resize(std::max(width.size(), r.size()));
            for (std::size_t i = 0; i < r.size(); ++i)
                width[i] = std::max(width[i], r[i].size());
        }
        for (const auto& r : rows_) {
            std::string line = indent;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size())
                    line += std::string(width[i] - r[i].size() + 2, ' ');
            }
            os << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string fraction(const json& f)
{
    return std::to_string(f.at("num").get<long long>()) + "/" + std::to_string(f.at("den").get<long long>()) + " (" +
           f.at("value").get<std::string>() + ")";
}

std::string text_or(const json& j, const char* key, const std::string& fallback = "-")
{
    return j.contains(key) && j.at(key).is_string() ? j.at(key).get<std::string>() : fallback;
}

std::string offer(const json& status)
{
    const json& o = status.at("best_offer");
    if (o.is_null())
        return "-";
    return o.at("course").get<std::string>() + "/" + o.at("outcome").get<std::string>() + " @ " +
           o.at("level").get<std::string>();
}

std::string join(const json& arr, const std::string& sep = ", ")
{
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty())
            out += sep;
        out += v.get<std::string>();
    }
    return out.empty() ? "-" : out;
}

}  // namespace

void print_diagnostics(std::ostream& os, const json& doc)
{
    if (!doc.is_object() || !doc.contains("diagnostics"))
        return;
    for (const auto& d : doc.at("diagnostics")) {
        const json& span = d.at("span");
        const std::string file = span.at("file").get<std::string>();
        if (!file.empty())
            os << file << ':' << span.at("line_start").get<int>() << ':' << span.at("col_start").get<int>() << ": ";
        os << d.at("severity").get<std::string>() << ' ' << d.at("code").get<std::string>() << ": "
           << d.at("message").get<std::string>() << '\n';
    }
}

void print_coverage(std::ostream& os, const json& report)
{
    os << "Competency " << report.at("competency").get<std::string>() << ": topics "
       << fraction(report.at("topic_fraction")) << ", skills " << (report.at("skills_ok").get<bool>() ? "ok" : "MISSING")
       << ", dispositions " << (report.at("dispositions_ok").get<bool>() ? "ok" : "MISSING") << '\n';
    Table t({"KIND", "REQUIREMENT", "LEVEL", "STATUS", "BEST OFFER"});
    for (const auto& s : report.at("statuses")) {
        t.add({s.at("kind").get<std::string>(), s.at("id").get<std::string>(), text_or(s, "required"),
               s.at("satisfied").get<bool>() ? "ok" : "GAP", offer(s)});
    }
    t.print(os);
}

void print_matrix(std::ostream& os, const json& matrix)
{
    std::vector<std::string> header = {"COMPETENCY"};
    for (const auto& c : matrix.at("courses"))
        header.push_back(c.get<std::string>());
    Table t(header);
    const json& comps = matrix.at("competencies");
    const json& cells = matrix.at("cells");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::vector<std::string> row = {comps[i].get<std::string>()};
        for (const auto& v : cells[i])
            row.push_back(v.get<int>() == 0 ? "." : std::to_string(v.get<int>()));
        t.add(std::move(row));
    }
    t.print(os, "");
}

void print_trace_topic(std::ostream& os, const json& doc)
{
    const json& comps = doc.at("competencies");
    os << "Topic " << doc.at("topic").get<std::string>() << " is required by " << comps.size() << " competenc"
       << (comps.size() == 1 ? "y" : "ies") << '\n';
    Table t({"COMPETENCY", "LEVEL"});
    for (const auto& h : comps)
        t.add({h.at("competency").get<std::string>(), h.at("level").get<std::string>()});
    if (!comps.empty())
        t.print(os);
}

void print_trace_competency(std::ostream& os, const json& doc)
{
    os << "Competency " << doc.at("competency").get<std::string>() << '\n';
    Table t({"TOPIC", "LEVEL"});
    for (const auto& r : doc.at("topics"))
        t.add({r.at("topic").get<std::string>(), r.at("level").get<std::string>()});
    t.print(os);
    os << "Courses:  " << join(doc.at("courses")) << '\n';
    os << "Outcomes: " << join(doc.at("outcomes")) << '\n';
}

void print_gaps(std::ostream& os, const json& doc)
{
    const json& comps = doc.at("competencies");
    if (comps.empty()) {
        os << "No unsatisfied requirements.\n";
    } else {
        Table t({"COMPETENCY", "REASON", "REQUIREMENT", "LEVEL", "BEST OFFER"});
        for (const auto& c : comps) {
            for (const auto& g : c.at("gaps")) {
                t.add({c.at("competency").get<std::string>(), g.at("reason").get<std::string>(),
                       g.at("id").get<std::string>(), text_or(g, "required"), offer(g)});
            }
        }
        t.print(os, "");
    }
    os << "Untaught topics: " << join(doc.at("untaught_topics")) << '\n';
    os << "Orphan topics:   " << join(doc.at("orphan_topics")) << '\n';
}

void print_pathway(std::ostream& os, const json& doc)
{
    os << "Pathway " << doc.at("pathway").get<std::string>() << '\n';
    Table t({"BLOCK", "MEAN TOPIC COVERAGE", "EMPHASIZED"});
    for (const auto& b : doc.at("blocks")) {
        t.add({std::to_string(b.at("block").get<int>()), fraction(b.at("mean_topic_fraction")),
               b.at("emphasized").get<bool>() ? "yes" : ""});
    }
    t.print(os);
    for (const auto& w : doc.at("warnings"))
        os << "warning " << w.at("code").get<std::string>() << ": " << w.at("message").get<std::string>() << '\n';
}

void print_whatif(std::ostream& os, const json& doc)
{
    const json& changed = doc.at("changed");
    if (changed.empty()) {
        os << "No competency coverage changes.\n";
    } else {
        Table t({"COMPETENCY", "BEFORE", "AFTER"});
        for (const auto& c : changed)
            t.add({c.at("competency").get<std::string>(), fraction(c.at("before")), fraction(c.at("after"))});
        t.print(os, "");
    }
    auto count = [](const json& report) {
        std::size_t n = 0;
        for (const auto& c : report.at("competencies"))
            n += c.at("gaps").size();
        return n;
    };
    os << "Gaps: " << count(doc.at("before")) << " before, " << count(doc.at("after")) << " after\n";
}

void print_stats(std::ostream& os, const json& doc)
{
    os << "Students:           " << doc.at("students").get<long long>() << '\n'
       << "Achievement pages:  " << doc.at("pages").get<long long>() << '\n'
       << "Linked specs:       " << doc.at("specs_total").get<long long>() << '\n'
       << "Revisions:          " << doc.at("revisions_total").get<long long>() << '\n'
       << "Specs per page:     " << fraction(doc.at("specs_per_page_mean")) << '\n';
}

}  // namespace cforge::cli
