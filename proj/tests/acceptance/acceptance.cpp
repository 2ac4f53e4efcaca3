// Copyright 2026 The greenberg Authors
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


// Acceptance runner: one PASS/FAIL line per criterion on stdout, failing
// cells on stderr.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "greenberg/verify/suites.hpp"
#include "greenberg/witt/laws.hpp"

namespace fs = std::filesystem;
using namespace greenberg;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (const char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

// Runs `verify all` twice through the CLI, each time from an empty cache,
// and compares the reports byte for byte.
bool determinism(const std::string& cli, const fs::path& work, std::string& detail) {
    std::error_code ec;
    fs::remove_all(work, ec);
    fs::create_directories(work);
    const auto start = std::chrono::steady_clock::now();
    for (int run = 1; run <= 2; ++run) {
        const fs::path cache = work / ("cache" + std::to_string(run));
        const fs::path out = work / ("report" + std::to_string(run) + ".json");
        const std::string cmd = shell_quote(cli) + " verify all --cache " + shell_quote(cache.string()) +
                                " --output " + shell_quote(out.string()) + " 2>" +
                                shell_quote((work / ("stderr" + std::to_string(run) + ".txt")).string());
        const int rc = std::system(cmd.c_str());
        if (rc == -1 || !fs::exists(out)) {
            detail = "run " + std::to_string(run) + " produced no report";
            return false;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string a = read_file(work / "report1.json"), b = read_file(work / "report2.json");
    std::ostringstream os;
    os << a.size() << " bytes, " << static_cast<long>(secs) << " s for both runs";
    detail = os.str();
    if (a != b) {
        detail = "reports differ; " + detail;
        return false;
    }
    if (secs / 2 > 20 * 60) {
        detail = "over the 20 minute budget; " + detail;
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    std::string cache = "acceptance_cache";
    std::string cli = GREENBERG_CLI;
    std::uint64_t seed = 20260101;
    app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
    app.add_option("--cache", cache, "structure-polynomial cache directory");
    app.add_option("--cli", cli, "path of the greenberg executable (criterion 10)");
    app.add_option("--seed", seed, "seed of the sampled checks");
    CLI11_PARSE(app, argc, argv);

    witt::set_cache_dir(cache);
    const Guards guards;
    bool all = true;
    for (int id = 1; id <= 10; ++id) {
        if (only != 0 && id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string summary;
        if (id == 10) {
            pass = determinism(cli, fs::path(cache) / "determinism", summary);
            if (!pass) std::cerr << "  " << summary << "\n";
            summary = "verify all twice from a clean cache: " + summary;
        } else {
            try {
                const auto r = verify::run_criterion(id, guards, seed);
                pass = r.pass();
                std::ostringstream os;
                os << r.title << " (" << r.count(verify::CellStatus::Pass) << " passed, "
                   << r.count(verify::CellStatus::Fail) << " failed, " << r.count(verify::CellStatus::Skipped)
                   << " skipped)";
                summary = os.str();
                for (const auto& c : r.cells)
                    if (c.status == verify::CellStatus::Fail) std::cerr << "  FAIL " << c.key << ": " << c.detail << "\n";
            } catch (const std::exception& e) {
                summary = e.what();
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " " << summary << " ["
                  << std::fixed << std::setprecision(1) << secs << " s]" << std::endl;
        all = all && pass;
    }
    return all ? 0 : 1;
}
