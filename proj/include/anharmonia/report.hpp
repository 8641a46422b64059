/*
   Copyright 2026 Anharmonia contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ANHARMONIA_REPORT_HPP
#define ANHARMONIA_REPORT_HPP

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace anharmonia {

struct Check {
    enum class Status { pass, fail, skipped };

    std::string name;
    Status status = Status::skipped;
    std::string residual; // "0 (exact)", a max-abs value, or a mismatch location
    std::string gauge;    // truncation order or tolerance the check ran at
    double wall_ms = 0.0;

    static const char *status_str(Status s) {
        switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skipped";
        }
    }
};

// Structured verification result. Process exit status is 0 iff no check
// failed; rendering (text/JSON) lives in the CLI layer.
struct Report {
    std::string suite;
    std::vector<Check> checks;

    explicit Report(std::string name = "") : suite(std::move(name)) {}

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const Check &c) { return c.status != Check::Status::fail; });
    }

    Check &add(const std::string &name, Check::Status status, const std::string &residual,
               const std::string &gauge, double wall_ms = 0.0) {
        checks.push_back({name, status, residual, gauge, wall_ms});
        return checks.back();
    }

    void add_pass(const std::string &name, const std::string &residual, const std::string &gauge) {
        add(name, Check::Status::pass, residual, gauge);
    }
    void add_fail(const std::string &name, const std::string &residual, const std::string &gauge) {
        add(name, Check::Status::fail, residual, gauge);
    }

    void absorb(const Report &other) {
        for (const auto &c : other.checks) checks.push_back(c);
    }

    void sort_by_name() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const Check &a, const Check &b) { return a.name < b.name; });
    }
};

// Runs fn, recording wall time; exceptions become failures carrying the
// message as residual text.
inline void run_check(Report &report, const std::string &name, const std::string &gauge,
                      const std::function<std::pair<bool, std::string>()> &fn) {
    auto t0 = std::chrono::steady_clock::now();
    Check::Status st;
    std::string residual;
    try {
        auto [ok, res] = fn();
        st = ok ? Check::Status::pass : Check::Status::fail;
        residual = res;
    } catch (const std::exception &e) {
        st = Check::Status::fail;
        residual = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.add(name, st, residual, gauge, ms);
}

} // namespace anharmonia

#endif
