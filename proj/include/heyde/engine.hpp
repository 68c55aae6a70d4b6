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

#include <optional>

#include "heyde/report.hpp"
#include "heyde/scenario.hpp"

namespace heyde {

struct RunOptions {
    std::optional<std::uint64_t> seed;
    int workers = 1;
    std::optional<double> tol_grid;
    std::optional<double> tol_exact;
    bool include_timings = false;
};

/// Execute every check of the scenario in order and collect the report.
/// Configuration problems (dangling references, kind/group mismatches)
/// throw; check outcomes, including expectation mismatches, are reported.
Report run_scenario(const Scenario& sc, const RunOptions& opts = {});

} // namespace heyde
