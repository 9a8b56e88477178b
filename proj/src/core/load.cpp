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

#include "cforge/interchange.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace cforge {

namespace fs = std::filesystem;

namespace {

Diagnostic io_error(const fs::path& path, const std::string& what)
{
    return Diagnostic::error(codes::io, path.string() + ": " + what, SourceSpan{path.string(), 1, 1, 1, 1});
}

std::optional<std::string> read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        return std::nullopt;
    return buf.str();
}

LoadResult finish(const ParseResult& parsed)
{
    LoadResult out;
    if (!parsed.ok()) {
        out.diagnostics = parsed.diagnostics;
        return out;
    }
    ValidationResult v = validate(*parsed.draft);
    out.diagnostics = std::move(v.diagnostics);
    out.model = std::move(v.model);
    return out;
}

}  // namespace

LoadResult compile(const SourceSet& sources) { return finish(parse(sources)); }

LoadResult load(const fs::path& dir)
{
    LoadResult out;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        out.diagnostics.push_back(io_error(dir, "not a readable directory"));
        return out;
    }
    std::vector<fs::path> files;
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
        if (it->is_regular_file(ec) && it->path().extension() == ".cdsl")
            files.push_back(it->path());
    }
    if (ec) {
        out.diagnostics.push_back(io_error(dir, ec.message()));
        return out;
    }
    std::sort(files.begin(), files.end());

    if (files.empty()) {
        const fs::path json_path = dir / "model.json";
        if (!fs::exists(json_path, ec))
            return compile({});
        auto text = read_file(json_path);
        if (!text) {
            out.diagnostics.push_back(io_error(json_path, "cannot read file"));
            return out;
        }
        return finish(draft_from_json(*text, json_path.string()));
    }

    SourceSet sources;
    for (const auto& f : files) {
        auto text = read_file(f);
        if (!text) {
            out.diagnostics.push_back(io_error(f, "cannot read file"));
            continue;
        }
        sources.push_back({f.string(), std::move(*text)});
    }
    if (!out.diagnostics.empty())
        return out;
    return compile(sources);
}

void write_files(const SourceSet& files, const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw Error(io_error(dir, "cannot create directory: " + ec.message()));
    for (const auto& f : files) {
        const fs::path target = dir / f.name;
        const fs::path tmp = dir / ("." + f.name + ".tmp");
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(f.text.data(), static_cast<std::streamsize>(f.text.size()));
            out.close();
            if (!out) {
                fs::remove(tmp, ec);
                throw Error(io_error(target, "write failed"));
            }
        }
        fs::rename(tmp, target, ec);
        if (ec) {
            fs::remove(tmp, ec);
            throw Error(io_error(target, "cannot move into place"));
        }
    }
}

std::string fingerprint(const Model& model)
{
    // FNV-1a, 64 bit, over the canonical DSL form.
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::string_view bytes) {
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    for (const auto& f : serialize(model)) {
        mix(f.name);
        mix(f.text);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cforge
