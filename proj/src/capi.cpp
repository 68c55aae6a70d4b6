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

#include "heyde.h"

#include <cstring>
#include <string>

#include "heyde/bundled.hpp"
#include "heyde/engine.hpp"
#include "heyde/errors.hpp"
#include "heyde/report.hpp"
#include "heyde/scenario.hpp"
#include "heyde/version.hpp"

struct heyde_scenario {
    heyde::Scenario model;
};

struct heyde_report {
    heyde::Report model;
};

namespace {

thread_local std::string g_last_error;

int set_error(int status, const std::string& msg) {
    g_last_error = msg;
    return status;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const heyde::ParseError& e) {
        return set_error(HEYDE_ERROR_PARSE, e.what());
    } catch (const heyde::ValidationError& e) {
        return set_error(HEYDE_ERROR_VALIDATION, e.what());
    } catch (const heyde::CapacityError& e) {
        return set_error(HEYDE_ERROR_CAPACITY, e.what());
    } catch (const heyde::DomainError& e) {
        return set_error(HEYDE_ERROR_DOMAIN, e.what());
    } catch (const heyde::IoError& e) {
        return set_error(HEYDE_ERROR_IO, e.what());
    } catch (const std::exception& e) {
        return set_error(HEYDE_ERROR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* heyde_version(void) { return heyde::kVersion; }

const char* heyde_status_name(int status) {
    switch (status) {
        case HEYDE_OK: return "ok";
        case HEYDE_ERROR_INVALID_ARGUMENT: return "invalid_argument";
        case HEYDE_ERROR_PARSE: return "parse_error";
        case HEYDE_ERROR_VALIDATION: return "validation_error";
        case HEYDE_ERROR_CAPACITY: return "capacity_error";
        case HEYDE_ERROR_DOMAIN: return "domain_error";
        case HEYDE_ERROR_IO: return "io_error";
        case HEYDE_ERROR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* heyde_last_error(void) { return g_last_error.c_str(); }

int heyde_scenario_from_file(const char* path, heyde_scenario** out) {
    if (path == nullptr || out == nullptr)
        return set_error(HEYDE_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* sc = new heyde_scenario{heyde::load_scenario_file(path)};
        *out = sc;
        return HEYDE_OK;
    });
}

int heyde_scenario_from_string(const char* text, const char* name, heyde_scenario** out) {
    if (text == nullptr || out == nullptr)
        return set_error(HEYDE_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* sc = new heyde_scenario{
            heyde::parse_scenario(text, name != nullptr ? name : "scenario")};
        *out = sc;
        return HEYDE_OK;
    });
}

int heyde_scenario_bundled(const char* name, heyde_scenario** out) {
    if (name == nullptr || out == nullptr)
        return set_error(HEYDE_ERROR_INVALID_ARGUMENT, "null argument");
    const char* text = heyde::bundled_scenario_text(name);
    if (text == nullptr)
        return set_error(HEYDE_ERROR_VALIDATION,
                         std::string("unknown bundled scenario '") + name + "'");
    return heyde_scenario_from_string(text, name, out);
}

void heyde_scenario_free(heyde_scenario* sc) { delete sc; }

const char* heyde_scenario_name(const heyde_scenario* sc) {
    return sc != nullptr ? sc->model.name.c_str() : "";
}

const char* heyde_scenario_description(const heyde_scenario* sc) {
    return sc != nullptr ? sc->model.description.c_str() : "";
}

int heyde_bundled_count(void) {
    return static_cast<int>(heyde::bundled_scenarios().size());
}

const char* heyde_bundled_name(int index) {
    const auto all = heyde::bundled_scenarios();
    if (index < 0 || static_cast<std::size_t>(index) >= all.size()) return nullptr;
    return all[static_cast<std::size_t>(index)].name;
}

const char* heyde_bundled_text(const char* name) {
    return name != nullptr ? heyde::bundled_scenario_text(name) : nullptr;
}

void heyde_run_options_init(heyde_run_options* opts) {
    if (opts == nullptr) return;
    *opts = heyde_run_options{};
    opts->workers = 1;
}

int heyde_run(const heyde_scenario* sc, const heyde_run_options* opts, heyde_report** out) {
    if (sc == nullptr || out == nullptr)
        return set_error(HEYDE_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        heyde::RunOptions ro;
        if (opts != nullptr) {
            if (opts->has_seed) ro.seed = opts->seed;
            ro.workers = opts->workers > 0 ? opts->workers : 1;
            if (opts->has_grid_tolerance) ro.tol_grid = opts->grid_tolerance;
            if (opts->has_exact_tolerance) ro.tol_exact = opts->exact_tolerance;
            ro.include_timings = opts->include_timings != 0;
        }
        auto* report = new heyde_report{heyde::run_scenario(sc->model, ro)};
        *out = report;
        return HEYDE_OK;
    });
}

void heyde_report_free(heyde_report* report) { delete report; }

int heyde_report_render_text(const heyde_report* report, char** out) {
    if (report == nullptr || out == nullptr)
        return set_error(HEYDE_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(heyde::render_text(report->model));
        return HEYDE_OK;
    });
}

int heyde_report_render_json(const heyde_report* report, char** out) {
    if (report == nullptr || out == nullptr)
        return set_error(HEYDE_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(heyde::render_json(report->model));
        return HEYDE_OK;
    });
}

int heyde_report_check_count(const heyde_report* report) {
    return report != nullptr ? static_cast<int>(report->model.checks.size()) : 0;
}

int heyde_report_expectations_met(const heyde_report* report) {
    return report != nullptr && report->model.all_met ? 1 : 0;
}

void heyde_string_free(char* s) { delete[] s; }

} // extern "C"
