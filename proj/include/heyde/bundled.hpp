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

#include <span>
#include <string>

namespace heyde {

struct BundledScenario {
    const char* name;
    const char* text;
};

/// Scenarios shipped inside the library, runnable by name without any files.
std::span<const BundledScenario> bundled_scenarios();

/// nullptr when the name is unknown.
const char* bundled_scenario_text(const std::string& name);

} // namespace heyde
