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

#include "service.hpp"

#include <httplib.h>

#include <chrono>
#include <ctime>

namespace cforge::cli {

namespace {

std::string utc_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void send(httplib::Response& res, int status, const json& doc)
{
    res.status = status;
    res.set_content(render(doc), "application/json");
}

void send(httplib::Response& res, const Reply& reply) { send(res, http_status(reply.status), reply.doc); }

bool flag(const httplib::Request& req, const char* name)
{
    if (!req.has_param(name))
        return false;
    const std::string v = req.get_param_value(name);
    return v.empty() || v == "1" || v == "true";
}

}  // namespace

int http_status(cforge_status status) noexcept
{
    switch (status) {
    case CFORGE_OK: return 200;
    case CFORGE_E_INVALID_ARGUMENT: return 400;
    case CFORGE_E_UNKNOWN_ID: return 404;
    case CFORGE_E_DELTA:
    case CFORGE_E_DIAGNOSTICS:
    case CFORGE_E_EMPTY_COHORT: return 422;
    case CFORGE_E_IO:
    case CFORGE_E_INTERNAL: return 500;
    }
    return 500;
}

Service::Service(std::filesystem::path dir, ModelHandle initial)
    : dir_(std::move(dir)),
      current_(std::make_shared<const Snapshot>(Snapshot{std::move(initial), dir_.string(), utc_now()})),
      server_(std::make_unique<httplib::Server>())
{
    routes();
}

Service::~Service() { stop(); }

std::shared_ptr<const Snapshot> Service::snapshot() const
{
    std::lock_guard lock(mu_);
    return current_;
}

Reply Service::reload()
{
    // Parsing and validation run without the lock; only the swap holds it.
    Loaded fresh = load_model(dir_.string());
    if (!fresh.model)
        return fresh.reply;
    auto next = std::make_shared<const Snapshot>(Snapshot{fresh.model, dir_.string(), utc_now()});
    {
        std::lock_guard lock(mu_);
        current_ = next;
    }
    Reply r = call(cforge_model_summary, next->model.get());
    r.doc["loaded_from"] = next->loaded_from;
    r.doc["loaded_at"] = next->loaded_at;
    r.doc["warnings"] = fresh.reply.doc.value("diagnostics", json::array());
    return r;
}

int Service::bind(const std::string& host, int port)
{
    if (port == 0)
        return server_->bind_to_any_port(host);
    return server_->bind_to_port(host, port) ? port : -1;
}

void Service::run() { server_->listen_after_bind(); }

void Service::stop()
{
    if (server_)
        server_->stop();
}

void Service::routes()
{
    httplib::Server& s = *server_;

    s.Get("/model", [this](const httplib::Request&, httplib::Response& res) {
        auto snap = snapshot();
        Reply r = call(cforge_model_summary, snap->model.get());
        if (r.ok()) {
            r.doc["loaded_from"] = snap->loaded_from;
            r.doc["loaded_at"] = snap->loaded_at;
        }
        send(res, r);
    });

    s.Get("/competencies", [this](const httplib::Request&, httplib::Response& res) {
        send(res, call(cforge_competencies, snapshot()->model.get()));
    });

    s.Get(R"(/competencies/([^/]+)/coverage)", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        send(res, call(cforge_coverage, snapshot()->model.get(), id.c_str(), flag(req, "strict_fpk") ? 1 : 0));
    });

    s.Get("/matrix", [this](const httplib::Request&, httplib::Response& res) {
        send(res, call(cforge_coverage_matrix, snapshot()->model.get()));
    });

    s.Get("/trace", [this](const httplib::Request& req, httplib::Response& res) {
        const bool topic = req.has_param("topic");
        const bool competency = req.has_param("competency");
        if (topic == competency) {
            send(res, 400, diagnostic_document("E_USAGE", "give exactly one of ?topic=ID or ?competency=ID"));
            return;
        }
        auto snap = snapshot();
        if (topic) {
            const std::string id = req.get_param_value("topic");
            send(res, call(cforge_trace_topic, snap->model.get(), id.c_str()));
        } else {
            const std::string id = req.get_param_value("competency");
            send(res, call(cforge_trace_competency, snap->model.get(), id.c_str()));
        }
    });

    s.Get("/gaps", [this](const httplib::Request& req, httplib::Response& res) {
        send(res, call(cforge_gaps, snapshot()->model.get(), flag(req, "strict_fpk") ? 1 : 0));
    });

    s.Get(R"(/pathways/([^/]+)/profile)", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        send(res, call(cforge_pathway_profile, snapshot()->model.get(), id.c_str(), flag(req, "strict_fpk") ? 1 : 0));
    });

    s.Post("/whatif", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string type = req.get_header_value("Content-Type");
        cforge_delta_format format = CFORGE_DELTA_AUTO;
        if (type.rfind("application/json", 0) == 0)
            format = CFORGE_DELTA_JSON;
        else if (type.rfind("text/", 0) == 0)
            format = CFORGE_DELTA_DSL;
        send(res, call(cforge_whatif, snapshot()->model.get(), req.body.c_str(), format,
                       flag(req, "strict_fpk") ? 1 : 0));
    });

    s.Get(R"(/portfolios/([^/]+)/attainment)", [this](const httplib::Request& req, httplib::Response& res) {
        if (!req.has_param("competency")) {
            send(res, 400, diagnostic_document("E_USAGE", "missing query parameter ?competency=ID"));
            return;
        }
        const std::string student = req.matches[1];
        const std::string competency = req.get_param_value("competency");
        send(res, call(cforge_attainment, snapshot()->model.get(), student.c_str(), competency.c_str()));
    });

    s.Get("/stats", [this](const httplib::Request&, httplib::Response& res) {
        send(res, call(cforge_cohort_stats, snapshot()->model.get()));
    });

    s.Post("/reload", [this](const httplib::Request&, httplib::Response& res) { send(res, reload()); });

    s.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (res.status == 404 && res.body.empty())
            send(res, 404, diagnostic_document("E_UNKNOWN_ID", "no endpoint " + req.method + " " + req.path));
    });

    s.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "unexpected failure";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            what = e.what();
        } catch (...) {
        }
        send(res, 500, diagnostic_document("E_INTERNAL", what));
    });
}

}  // namespace cforge::cli
