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

#include "client.hpp"

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>

namespace httplib {
class Server;
}

namespace cforge::cli {

/// One immutable model snapshot plus where and when it was loaded.
struct Snapshot {
    ModelHandle model;
    std::string loaded_from;
    std::string loaded_at;  // ISO-8601 UTC
};

/// Read-mostly JSON query service over a model directory. Requests are
/// served from whichever snapshot was current when they started; `/reload`
/// builds a new snapshot and swaps it in under a short lock.
class Service {
public:
    /// `initial` must hold a model.
    Service(std::filesystem::path dir, ModelHandle initial);
    ~Service();

    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Binds `host:port` (port 0 picks a free one). Returns the bound port,
    /// or -1 when binding failed.
    int bind(const std::string& host, int port);

    /// Serves until stop() is called. Requires a successful bind().
    void run();
    void stop();

    std::shared_ptr<const Snapshot> snapshot() const;

    /// Reloads from the directory; on failure the current snapshot stays.
    Reply reload();

private:
    void routes();

    std::filesystem::path dir_;
    mutable std::mutex mu_;
    std::shared_ptr<const Snapshot> current_;
    std::unique_ptr<httplib::Server> server_;
};

/// HTTP status for a C API status.
int http_status(cforge_status status) noexcept;

}  // namespace cforge::cli
