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

// Scenario runner on top of the shared-library C API.
//
// Exit codes: 0 all expectations met, 1 expectation mismatch,
// 2 configuration error, 3 capacity error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heyde.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectationMismatch = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitCapacityError = 3;

int exit_code_for(int status) {
    return status == HEYDE_ERROR_CAPACITY ? kExitCapacityError : kExitConfigError;
}

int fail(int status) {
    std::cerr << "error (" << heyde_status_name(status) << "): " << heyde_last_error() << "\n";
    return exit_code_for(status);
}

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

struct ScenarioHandle {
    heyde_scenario* ptr = nullptr;
    ~ScenarioHandle() { heyde_scenario_free(ptr); }
};

struct ReportHandle {
    heyde_report* ptr = nullptr;
    ~ReportHandle() { heyde_report_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { heyde_string_free(ptr); }
};

// A file path wins; otherwise the name is looked up among the bundled
// scenarios.
int load_scenario(const std::string& arg, ScenarioHandle& sc) {
    if (file_exists(arg)) return heyde_scenario_from_file(arg.c_str(), &sc.ptr);
    if (heyde_bundled_text(arg.c_str()) != nullptr)
        return heyde_scenario_bundled(arg.c_str(), &sc.ptr);
    return heyde_scenario_from_file(arg.c_str(), &sc.ptr);
}

bool parse_tolerance(const std::string& spec, heyde_run_options& opts, std::string& err) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
        err = "tolerance must be key=value, got '" + spec + "'";
        return false;
    }
    const std::string key = spec.substr(0, eq);
    double value = 0.0;
    try {
        value = std::stod(spec.substr(eq + 1));
    } catch (const std::exception&) {
        err = "bad tolerance value in '" + spec + "'";
        return false;
    }
    if (key == "grid") {
        opts.grid_tolerance = value;
        opts.has_grid_tolerance = 1;
    } else if (key == "exact") {
        opts.exact_tolerance = value;
        opts.has_exact_tolerance = 1;
    } else {
        err = "unknown tolerance key '" + key + "' (use grid or exact)";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"probability on locally compact abelian groups: scenario checks"};
    app.set_version_flag("--version", std::string(heyde_version()));
    app.require_subcommand(1);

    std::string scenario_arg;
    std::string format = "text";
    std::string out_path;
    std::vector<std::string> tolerances;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 1;
    bool timings = false;

    CLI::App* run = app.add_subcommand("run", "run a scenario file or bundled scenario");
    run->add_option("scenario", scenario_arg, "scenario file path or bundled name")->required();
    run->add_option("--format", format, "report format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    run->add_option("--seed", seed, "override the scenario seed")
        ->each([&](const std::string&) { seed_set = true; });
    run->add_option("--workers", workers, "worker threads for Monte Carlo checks")
        ->check(CLI::PositiveNumber);
    run->add_option("--tolerance", tolerances,
                    "override a tolerance, e.g. --tolerance grid=1e-9 --tolerance exact=1e-12");
    run->add_option("--out", out_path, "write the report to a file instead of stdout");
    run->add_flag("--timings", timings, "include wall time in the report");

    CLI::App* list = app.add_subcommand("list-scenarios", "list bundled scenarios");

    std::string describe_arg;
    CLI::App* describe = app.add_subcommand("describe", "show a bundled scenario");
    describe->add_option("scenario", describe_arg, "bundled scenario name")->required();

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (int i = 0; i < heyde_bundled_count(); ++i) {
            const char* name = heyde_bundled_name(i);
            ScenarioHandle sc;
            if (heyde_scenario_bundled(name, &sc.ptr) != HEYDE_OK) continue;
            std::printf("%-24s %s\n", name, heyde_scenario_description(sc.ptr));
        }
        return kExitOk;
    }

    if (describe->parsed()) {
        const char* text = heyde_bundled_text(describe_arg.c_str());
        if (text == nullptr) {
            std::cerr << "error: unknown bundled scenario '" << describe_arg << "'\n";
            return kExitConfigError;
        }
        std::fputs(text, stdout);
        return kExitOk;
    }

    ScenarioHandle sc;
    if (const int st = load_scenario(scenario_arg, sc); st != HEYDE_OK) return fail(st);

    heyde_run_options opts;
    heyde_run_options_init(&opts);
    if (seed_set) {
        opts.seed = seed;
        opts.has_seed = 1;
    }
    opts.workers = workers;
    opts.include_timings = timings ? 1 : 0;
    for (const std::string& t : tolerances) {
        std::string err;
        if (!parse_tolerance(t, opts, err)) {
            std::cerr << "error: " << err << "\n";
            return kExitConfigError;
        }
    }

    ReportHandle report;
    if (const int st = heyde_run(sc.ptr, &opts, &report.ptr); st != HEYDE_OK) return fail(st);

    StringHandle rendered;
    const int st = format == "structured"
                       ? heyde_report_render_json(report.ptr, &rendered.ptr)
                       : heyde_report_render_text(report.ptr, &rendered.ptr);
    if (st != HEYDE_OK) return fail(st);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitConfigError;
        }
        out << rendered.ptr;
    } else {
        std::fputs(rendered.ptr, stdout);
    }
    return heyde_report_expectations_met(report.ptr) ? kExitOk : kExitExpectationMismatch;
}
