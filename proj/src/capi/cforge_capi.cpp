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

#include "cforge/cforge.h"

#include "cforge/coverage.hpp"
#include "cforge/dsl.hpp"
#include "cforge/graph.hpp"
#include "cforge/interchange.hpp"
#include "cforge/portfolio.hpp"
#include "cforge/report_json.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

struct cforge_model {
    cforge::Model model;
    cforge::Graph graph;
};

namespace {

using cforge::json::json;

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** out, const std::string& text)
{
    if (out != nullptr)
        *out = dup_string(text);
}

void put(char** out, const json& doc) { put(out, doc.dump()); }

cforge_status fail(char** out, cforge_status status, const cforge::Diagnostics& diags)
{
    put(out, cforge::json::diagnostics_document(diags));
    return status;
}

cforge_status fail(char** out, cforge_status status, std::string_view code, std::string message)
{
    return fail(out, status, {cforge::Diagnostic::error(code, std::move(message))});
}

cforge_status status_for(std::string_view code)
{
    if (code == cforge::codes::unknown_id)
        return CFORGE_E_UNKNOWN_ID;
    if (code == cforge::codes::io)
        return CFORGE_E_IO;
    if (code == cforge::codes::empty_cohort)
        return CFORGE_E_EMPTY_COHORT;
    if (code == cforge::codes::usage)
        return CFORGE_E_INVALID_ARGUMENT;
    return CFORGE_E_DIAGNOSTICS;
}

/// Runs `body` with the exception boundary every entry point needs.
template <class F>
cforge_status guarded(char** out, F&& body)
{
    if (out != nullptr)
        *out = nullptr;
    try {
        return body();
    } catch (const cforge::Error& e) {
        return fail(out, status_for(e.diagnostic().code), e.diagnostics());
    } catch (const std::bad_alloc&) {
        return fail(out, CFORGE_E_INTERNAL, "E_INTERNAL", "out of memory");
    } catch (const std::exception& e) {
        return fail(out, CFORGE_E_INTERNAL, "E_INTERNAL", e.what());
    } catch (...) {
        return fail(out, CFORGE_E_INTERNAL, "E_INTERNAL", "unknown failure");
    }
}

#define CFORGE_REQUIRE(cond, what)                                                                    \
    do {                                                                                              \
        if (!(cond))                                                                                  \
            return fail(out_json, CFORGE_E_INVALID_ARGUMENT, cforge::codes::usage, what " is required"); \
    } while (0)

cforge_status finish_load(cforge::LoadResult result, cforge_model** out, char** out_json)
{
    if (!result.ok()) {
        // A directory that cannot be read is a file-system failure, not a
        // problem with the sources.
        const bool io_only = std::all_of(result.diagnostics.begin(), result.diagnostics.end(),
                                         [](const cforge::Diagnostic& d) { return d.code == cforge::codes::io; });
        return fail(out_json, io_only ? CFORGE_E_IO : CFORGE_E_DIAGNOSTICS, result.diagnostics);
    }
    auto* handle = new cforge_model{*result.model, cforge::build_graph(*result.model)};
    *out = handle;
    put(out_json, cforge::json::diagnostics_document(result.diagnostics));
    return CFORGE_OK;
}

cforge::CoverageOptions options(int strict_fpk) { return {.strict_fpk = strict_fpk != 0}; }

cforge::WhatIfDelta read_delta(std::string_view text, cforge_delta_format format)
{
    if (format == CFORGE_DELTA_AUTO) {
        const auto first = text.find_first_not_of(" \t\r\n");
        format = first != std::string_view::npos && text[first] == '{' ? CFORGE_DELTA_JSON : CFORGE_DELTA_DSL;
    }
    if (format == CFORGE_DELTA_JSON) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw cforge::Error(cforge::codes::parse, std::string("malformed JSON delta: ") + e.what());
        }
        return cforge::json::delta_from_json(doc);
    }
    auto parsed = cforge::parse_delta(text);
    if (!parsed.delta)
        throw cforge::Error::from(parsed.diagnostics);
    return *parsed.delta;
}

}  // namespace

extern "C" {

const char* cforge_version(void) { return "1.0.0"; }

const char* cforge_status_name(cforge_status status)
{
    switch (status) {
    case CFORGE_OK: return "CFORGE_OK";
    case CFORGE_E_INVALID_ARGUMENT: return "CFORGE_E_INVALID_ARGUMENT";
    case CFORGE_E_DIAGNOSTICS: return "CFORGE_E_DIAGNOSTICS";
    case CFORGE_E_UNKNOWN_ID: return "CFORGE_E_UNKNOWN_ID";
    case CFORGE_E_DELTA: return "CFORGE_E_DELTA";
    case CFORGE_E_IO: return "CFORGE_E_IO";
    case CFORGE_E_EMPTY_COHORT: return "CFORGE_E_EMPTY_COHORT";
    case CFORGE_E_INTERNAL: return "CFORGE_E_INTERNAL";
    }
    return "CFORGE_E_UNKNOWN_STATUS";
}

void cforge_string_free(char* text) { std::free(text); }

cforge_status cforge_model_load_dir(const char* dir, cforge_model** out, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(out != nullptr, "output handle");
        *out = nullptr;
        CFORGE_REQUIRE(dir != nullptr, "directory");
        return finish_load(cforge::load(dir), out, out_json);
    });
}

cforge_status cforge_model_load_sources(const char* const* names, const char* const* texts, size_t count,
                                        cforge_model** out, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(out != nullptr, "output handle");
        *out = nullptr;
        CFORGE_REQUIRE(count == 0 || (names != nullptr && texts != nullptr), "source arrays");
        cforge::SourceSet sources;
        for (size_t i = 0; i < count; ++i) {
            CFORGE_REQUIRE(names[i] != nullptr && texts[i] != nullptr, "source entry");
            sources.push_back({names[i], texts[i]});
        }
        return finish_load(cforge::compile(sources), out, out_json);
    });
}

void cforge_model_free(cforge_model* model) { delete model; }

cforge_status cforge_model_summary(const cforge_model* model, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        put(out_json, cforge::json::model_summary(model->model));
        return CFORGE_OK;
    });
}

cforge_status cforge_competencies(const cforge_model* model, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        put(out_json, cforge::json::competency_list(model->model));
        return CFORGE_OK;
    });
}

cforge_status cforge_coverage(const cforge_model* model, const char* competency, int strict_fpk, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        CFORGE_REQUIRE(competency != nullptr, "competency");
        put(out_json, cforge::json::to_json(cforge::competency_coverage(model->graph, competency, options(strict_fpk))));
        return CFORGE_OK;
    });
}

cforge_status cforge_coverage_matrix(const cforge_model* model, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        put(out_json, cforge::json::to_json(cforge::coverage_matrix(model->graph)));
        return CFORGE_OK;
    });
}

cforge_status cforge_trace_topic(const cforge_model* model, const char* topic, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        CFORGE_REQUIRE(topic != nullptr, "topic");
        put(out_json, cforge::json::trace_forward_document(topic, cforge::trace_forward(model->graph, topic)));
        return CFORGE_OK;
    });
}

cforge_status cforge_trace_competency(const cforge_model* model, const char* competency, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        CFORGE_REQUIRE(competency != nullptr, "competency");
        put(out_json,
            cforge::json::trace_backward_document(competency, cforge::trace_backward(model->graph, competency)));
        return CFORGE_OK;
    });
}

cforge_status cforge_gaps(const cforge_model* model, int strict_fpk, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        put(out_json, cforge::json::to_json(cforge::gap_report(model->graph, options(strict_fpk))));
        return CFORGE_OK;
    });
}

cforge_status cforge_pathway_profile(const cforge_model* model, const char* pathway, int strict_fpk,
                                     char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        CFORGE_REQUIRE(pathway != nullptr, "pathway");
        put(out_json, cforge::json::to_json(cforge::pathway_profile(model->graph, pathway, options(strict_fpk))));
        return CFORGE_OK;
    });
}

cforge_status cforge_whatif(const cforge_model* model, const char* delta, cforge_delta_format format,
                            int strict_fpk, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        CFORGE_REQUIRE(delta != nullptr, "delta");
        if (format != CFORGE_DELTA_AUTO && format != CFORGE_DELTA_JSON && format != CFORGE_DELTA_DSL)
            return fail(out_json, CFORGE_E_INVALID_ARGUMENT, cforge::codes::usage, "unknown delta format");
        try {
            const auto d = read_delta(delta, format);
            put(out_json, cforge::json::to_json(cforge::whatif(model->graph, d, options(strict_fpk))));
        } catch (const cforge::Error& e) {
            // Every failure to apply the delta is the caller's delta's fault.
            return fail(out_json, CFORGE_E_DELTA, e.diagnostics());
        }
        return CFORGE_OK;
    });
}

cforge_status cforge_attainment(const cforge_model* model, const char* student, const char* competency,
                                char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        CFORGE_REQUIRE(student != nullptr, "student");
        CFORGE_REQUIRE(competency != nullptr, "competency");
        put(out_json, cforge::json::to_json(cforge::attainment(model->graph, student, competency)));
        return CFORGE_OK;
    });
}

cforge_status cforge_cohort_stats(const cforge_model* model, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        const auto stats = cforge::cohort_stats(model->model.data().portfolios);
        (void)stats.specs_per_page_mean();  // E_EMPTY_COHORT for a cohort without pages
        put(out_json, cforge::json::to_json(stats));
        return CFORGE_OK;
    });
}

cforge_status cforge_export(const cforge_model* model, const char* format, const char* out_dir, char** out_json)
{
    return guarded(out_json, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        CFORGE_REQUIRE(format != nullptr, "format");
        const auto fmt = cforge::parse_export_format(format);
        if (!fmt) {
            return fail(out_json, CFORGE_E_INVALID_ARGUMENT, cforge::codes::usage,
                        std::string("unknown export format '") + format + "' (expected dsl, json, wiki or dot)");
        }
        const auto files = cforge::export_model(model->model, *fmt);
        if (out_dir != nullptr)
            cforge::write_files(files, out_dir);
        json list = json::array();
        for (const auto& f : files) {
            json entry = {{"name", f.name}};
            if (out_dir == nullptr)
                entry["text"] = f.text;
            list.push_back(std::move(entry));
        }
        put(out_json, json{{"format", format}, {"files", std::move(list)}});
        return CFORGE_OK;
    });
}

cforge_status cforge_fingerprint(const cforge_model* model, char** out)
{
    char** out_json = out;
    return guarded(out, [&] {
        CFORGE_REQUIRE(model != nullptr, "model");
        put(out, cforge::fingerprint(model->model));
        return CFORGE_OK;
    });
}

}  // extern "C"
