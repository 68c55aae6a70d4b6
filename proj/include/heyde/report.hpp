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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heyde/structure.hpp"

namespace heyde {

struct CheckRecord {
    int index = 0;
    std::string name;
    std::string kind;
    std::string verdict;
    std::map<std::string, double> metrics; // residuals, p-values, fitted parameters
    std::string witness;
    std::vector<std::string> notes;
    std::vector<DecomposeStep> certificate; // decompose checks only
    std::optional<std::string> expect;
    bool expect_met = true;
    double wall_seconds = 0.0;
};

/// Deterministic given (scenario, seed, worker count). Timings are carried
/// alongside but only rendered when `include_timings` is set, so the
/// structured format stays byte-identical across runs.
struct Report {
    std::string scenario;
    std::string version;
    std::uint64_t seed = 0;
    int workers = 1;
    double tol_grid = 1e-9;
    double tol_exact = 1e-12;
    bool include_timings = false;
    std::vector<CheckRecord> checks;
    int expectations = 0;
    int expectations_met = 0;
    bool all_met = true;
};

/// Fixed-layout table for humans.
std::string render_text(const Report& r);

/// Stable JSON layout for machines (sorted keys, documented in the README).
std::string render_json(const Report& r);

} // namespace heyde
