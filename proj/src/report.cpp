/*
 * Copyright 2026 The heyde toolkit authors
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

#include "heyde/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace heyde {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string metrics_summary(const CheckRecord& c) {
    std::string out;
    for (const auto& [k, v] : c.metrics) {
        if (!out.empty()) out += " ";
        out += k + "=" + fmt_double(v);
    }
    return out;
}

} // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "scenario: " << r.scenario << "\n";
    os << "version " << r.version << "  seed " << r.seed << "  workers " << r.workers
       << "  grid_tol " << fmt_double(r.tol_grid) << "  exact_tol " << fmt_double(r.tol_exact)
       << "\n";
    os << "--------------------------------------------------------------------------------\n";
    char line[256];
    std::snprintf(line, sizeof(line), "%-3s %-24s %-18s %-12s %-10s %s\n", "#", "name", "kind",
                  "verdict", "expect", "metrics");
    os << line;
    for (const CheckRecord& c : r.checks) {
        std::string expect = c.expect ? (*c.expect + (c.expect_met ? " ok" : " MISMATCH")) : "-";
        std::snprintf(line, sizeof(line), "%-3d %-24s %-18s %-12s %-10s %s\n", c.index,
                      c.name.substr(0, 24).c_str(), c.kind.c_str(), c.verdict.c_str(),
                      expect.c_str(), metrics_summary(c).c_str());
        os << line;
        if (!c.witness.empty()) os << "    witness: " << c.witness << "\n";
        for (const std::string& n : c.notes) os << "    note: " << n << "\n";
        for (const DecomposeStep& s : c.certificate) {
            os << "    step " << s.name << ": residual " << fmt_double(s.residual) << " "
               << (s.passed ? "ok" : "FAIL");
            if (!s.note.empty()) os << " (" << s.note << ")";
            os << "\n";
        }
        if (r.include_timings) os << "    time: " << fmt_double(c.wall_seconds) << " s\n";
    }
    os << "--------------------------------------------------------------------------------\n";
    os << "expectations: " << r.expectations_met << "/" << r.expectations << " met"
       << (r.all_met ? "" : "  [MISMATCH]") << "\n";
    return os.str();
}

std::string render_json(const Report& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["tool"] = {{"name", "heyde"}, {"version", r.version}};
    j["scenario"] = r.scenario;
    j["seed"] = r.seed;
    j["workers"] = r.workers;
    j["tolerances"] = {{"grid", r.tol_grid}, {"exact", r.tol_exact}};
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRecord& c : r.checks) {
        nlohmann::json jc;
        jc["index"] = c.index;
        jc["name"] = c.name;
        jc["kind"] = c.kind;
        jc["verdict"] = c.verdict;
        if (!c.metrics.empty()) {
            nlohmann::json m;
            for (const auto& [k, v] : c.metrics) m[k] = v;
            jc["metrics"] = m;
        }
        if (!c.witness.empty()) jc["witness"] = c.witness;
        if (!c.notes.empty()) jc["notes"] = c.notes;
        if (!c.certificate.empty()) {
            nlohmann::json steps = nlohmann::json::array();
            for (const DecomposeStep& s : c.certificate) {
                nlohmann::json js;
                js["name"] = s.name;
                js["residual"] = s.residual;
                js["passed"] = s.passed;
                if (!s.note.empty()) js["note"] = s.note;
                steps.push_back(js);
            }
            jc["certificate"] = steps;
        }
        if (c.expect) {
            jc["expect"] = *c.expect;
            jc["expect_met"] = c.expect_met;
        }
        if (r.include_timings) jc["wall_seconds"] = c.wall_seconds;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["summary"] = {{"checks", r.checks.size()},
                    {"expectations", r.expectations},
                    {"expectations_met", r.expectations_met},
                    {"all_met", r.all_met}};
    return j.dump(2) + "\n";
}

} // namespace heyde
