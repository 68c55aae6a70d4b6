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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "heyde.h"

namespace {

struct Scenario {
    heyde_scenario* ptr = nullptr;
    ~Scenario() { heyde_scenario_free(ptr); }
};

struct Report {
    heyde_report* ptr = nullptr;
    ~Report() { heyde_report_free(ptr); }
};

struct Str {
    char* ptr = nullptr;
    ~Str() { heyde_string_free(ptr); }
};

} // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(heyde_version()) == "0.1.0");
    CHECK(std::string(heyde_status_name(HEYDE_OK)) == "ok");
    CHECK(std::string(heyde_status_name(HEYDE_ERROR_CAPACITY)) == "capacity_error");
}

TEST_CASE("bundled registry") {
    CHECK(heyde_bundled_count() == 8);
    bool found = false;
    for (int i = 0; i < heyde_bundled_count(); ++i)
        if (std::string(heyde_bundled_name(i)) == "remark_3_1") found = true;
    CHECK(found);
    CHECK(heyde_bundled_name(99) == nullptr);
    CHECK(heyde_bundled_text("remark_2_2") != nullptr);
    CHECK(heyde_bundled_text("nope") == nullptr);
}

TEST_CASE("null arguments are rejected with a message") {
    CHECK(heyde_scenario_from_file(nullptr, nullptr) == HEYDE_ERROR_INVALID_ARGUMENT);
    CHECK(std::strlen(heyde_last_error()) > 0);
    heyde_scenario* sc = nullptr;
    CHECK(heyde_scenario_bundled("missing", &sc) == HEYDE_ERROR_VALIDATION);
    CHECK(std::string(heyde_last_error()).find("missing") != std::string::npos);
}

TEST_CASE("parse errors map to status codes") {
    heyde_scenario* sc = nullptr;
    CHECK(heyde_scenario_from_string("schema = [", "bad", &sc) == HEYDE_ERROR_PARSE);
    CHECK(heyde_scenario_from_string("schema = 1\nwat = 1", "bad", &sc) ==
          HEYDE_ERROR_VALIDATION);
    CHECK(heyde_scenario_from_file("/nonexistent/path.heyde", &sc) == HEYDE_ERROR_IO);
}

TEST_CASE("bundled scenario runs through the C surface") {
    Scenario sc;
    REQUIRE(heyde_scenario_bundled("prop_2_1_adic", &sc.ptr) == HEYDE_OK);
    CHECK(std::string(heyde_scenario_name(sc.ptr)) == "prop_2_1_adic");
    CHECK(std::strlen(heyde_scenario_description(sc.ptr)) > 0);

    heyde_run_options opts;
    heyde_run_options_init(&opts);
    opts.has_seed = 1;
    opts.seed = 42;

    Report rep;
    REQUIRE(heyde_run(sc.ptr, &opts, &rep.ptr) == HEYDE_OK);
    CHECK(heyde_report_check_count(rep.ptr) == 7);
    CHECK(heyde_report_expectations_met(rep.ptr) == 1);

    Str text;
    REQUIRE(heyde_report_render_text(rep.ptr, &text.ptr) == HEYDE_OK);
    CHECK(std::string(text.ptr).find("prop_2_1_adic") != std::string::npos);

    Str json;
    REQUIRE(heyde_report_render_json(rep.ptr, &json.ptr) == HEYDE_OK);
    const std::string j(json.ptr);
    CHECK(j.find("\"scenario\": \"prop_2_1_adic\"") != std::string::npos);
    CHECK(j.find("\"all_met\": true") != std::string::npos);

    // Determinism through the C surface too.
    Report rep2;
    REQUIRE(heyde_run(sc.ptr, &opts, &rep2.ptr) == HEYDE_OK);
    Str json2;
    REQUIRE(heyde_report_render_json(rep2.ptr, &json2.ptr) == HEYDE_OK);
    CHECK(std::string(json2.ptr) == j);
}

TEST_CASE("inline scenario text with an expectation mismatch") {
    const char* text = R"(schema = 1
group = {type = "finite", moduli = [5]}
automorphism = {matrix = [[2]]}
check = {kind = "condition1", expect = false}
)";
    Scenario sc;
    REQUIRE(heyde_scenario_from_string(text, "inline", &sc.ptr) == HEYDE_OK);
    Report rep;
    REQUIRE(heyde_run(sc.ptr, nullptr, &rep.ptr) == HEYDE_OK);
    CHECK(heyde_report_expectations_met(rep.ptr) == 0);
}

TEST_CASE("capacity errors map to their status") {
    const char* text = R"(schema = 1
group = {type = "finite", moduli = [100, 100, 100]}
)";
    Scenario sc;
    REQUIRE(heyde_scenario_from_string(text, "big", &sc.ptr) == HEYDE_OK);
    Report rep;
    CHECK(heyde_run(sc.ptr, nullptr, &rep.ptr) == HEYDE_ERROR_CAPACITY);
}
