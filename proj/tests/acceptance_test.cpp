/*
 * Copyright 2026 The koszul authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds.  Criteria 1 through 8 run the deterministic verify suite in
// process and additionally enforce the published time budgets; criterion 9
// spawns the installed CLI and compares verification bytes across repeated
// runs and thread counts.

#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "koszul/verify.hpp"

namespace {

struct Criterion {
    std::string label;
    std::string check;
    double budget_seconds;
};

const std::vector<Criterion> kCriteria = {
    {"1 betti numbers from the resolution match koszul cohomology",
     "betti-koszul-agreement", 60.0},
    {"2 line-bundle grid: syzygy vanishing = b >= p = ampleness tester",
     "sections-grid-equivalence", 300.0},
    {"3 certified submodule instances force a nonzero syzygy",
     "submodule-certificates", 0.0},
    {"4 curve inequality sweep with the euler-characteristic oracle",
     "curve-criterion-sweep", 10.0},
    {"5 effective degree bound table is regression-locked",
     "adjoint-degree-bounds", 0.0},
    {"6 polygraph ext invariants vanish on the proved cases",
     "polygraph-vanishing", 1800.0},
    {"7 very-ampleness orders on the line are exact through six",
     "ampleness-orders", 30.0},
    {"8 duality pairs syzygies of degree b and -2-b on the line",
     "line-duality", 0.0},
};

std::string capture_stdout(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("failed to launch: " + command);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (status != 0)
        throw std::runtime_error("nonzero exit from: " + command);
    return out;
}

bool report(const std::string& label, bool pass, const std::string& detail) {
    std::printf("%s  %s  (%s)\n", pass ? "PASS" : "FAIL", label.c_str(),
                detail.c_str());
    return pass;
}

}  // namespace

int main() {
    koszul::VerifyOptions opts;
    opts.level = "full";
    std::vector<koszul::CheckResult> results;
    try {
        results = koszul::verify_suite(opts);
    } catch (const std::exception& e) {
        std::printf("FAIL  verify suite aborted  (%s)\n", e.what());
        return 1;
    }

    std::map<std::string, const koszul::CheckResult*> by_name;
    for (const auto& r : results) by_name[r.name] = &r;

    bool all = true;
    for (const auto& c : kCriteria) {
        auto it = by_name.find(c.check);
        if (it == by_name.end()) {
            all &= report(c.label, false, "check " + c.check + " missing");
            continue;
        }
        const auto& r = *it->second;
        bool in_budget = c.budget_seconds <= 0.0 || r.seconds < c.budget_seconds;
        char detail[256];
        std::snprintf(detail, sizeof detail, "%s, %.2fs%s", r.detail.c_str(),
                      r.seconds, in_budget ? "" : ", over budget");
        all &= report(c.label, r.pass && in_budget, detail);
    }

    const std::string base = std::string(KOSZUL_CLI_PATH) +
                             " verify --level fast --seed 20260822";
    try {
        std::string one = capture_stdout(base + " --threads 1 2>/dev/null");
        std::string two = capture_stdout(base + " --threads 1 2>/dev/null");
        std::string eight = capture_stdout(base + " --threads 8 2>/dev/null");
        bool stable = !one.empty() && one == two && one == eight;
        all &= report("9 repeated cli verification is byte-identical across threads",
                      stable,
                      stable ? std::to_string(one.size()) + " bytes stable"
                             : "outputs differ between runs");
    } catch (const std::exception& e) {
        all &= report("9 repeated cli verification is byte-identical across threads",
                      false, e.what());
    }

    std::printf("%s\n", all ? "ACCEPTED" : "REJECTED");
    return all ? 0 : 1;
}
