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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heyde/group.hpp"
#include "heyde/kv.hpp"

namespace heyde {

struct GroupSpecModel {
    enum class Kind { Finite, RealExt, SolenoidDual, AdicTruncation };
    Kind kind = Kind::Finite;
    Coords moduli;                            // finite group / finite part
    int real_dim = 1;                         // real_ext
    std::vector<std::int64_t> prefix;         // solenoid kinds
    std::vector<std::int64_t> infinite_primes;
    int level = 0;                            // adic truncation
};

struct AutoSpecModel {
    enum class Kind { FiniteMatrix, RealBlock, Solenoid };
    Kind kind = Kind::FiniteMatrix;
    std::vector<Coords> matrix;                    // finite matrix (also real block's finite part)
    bool has_finite_matrix = false;
    double a = 1.0;                                // real scalar action
    bool has_real_matrix = false;
    std::array<std::array<double, 2>, 2> real_matrix{{{1.0, 0.0}, {0.0, 1.0}}};
    std::int64_t p = 1, q = 1;                     // solenoid
};

struct DistSpecModel {
    std::string type; // finite | gauss | quad_gauss | remark31 | solenoid_gauss |
                      // product | convolve | shift | ref
    std::vector<double> probs;
    double sigma = 0.0;
    double sigma_prime = 0.0;
    double kappa = 0.0;
    double b = 0.0;
    double t = 0.0;
    std::array<std::array<double, 2>, 2> a_matrix{{{0.0, 0.0}, {0.0, 0.0}}};
    std::array<double, 2> b_vec{0.0, 0.0};
    std::vector<DistSpecModel> children; // product factors / convolve parts / shift base
    std::string ref;                     // type == "ref": named distribution
    Coords g_shift;                      // shift: finite coordinates
    double t_shift = 0.0;                // shift: real coordinate
    bool has_g_shift = false;
};

struct CheckSpecModel {
    std::string kind;
    std::string name;                  // defaults to kind + index
    std::string mu, mu1, mu2;          // distribution references
    std::optional<std::string> expect; // normalized verdict token
    std::optional<AutoSpecModel> automorphism;
    // Numeric parameters with per-kind defaults.
    std::int64_t samples = 1000000;
    std::int64_t bins = 32;
    std::int64_t instances = 100;
    std::int64_t max_order = 64;
    std::int64_t functions = 50;
    std::int64_t max_modulus = 12;
    std::int64_t degrees = 4;
    std::int64_t levels = 3;
    std::int64_t multiplier = 1; // truncation_kernel: the n of f_n
    std::string torsion = "auto";
    std::vector<Coords> torsion_elements; // torsion == "explicit"
};

struct GridSpecModel {
    double min = -4.0;
    double max = 4.0;
    double step = 0.25;
};

struct SolenoidPointsModel {
    int max_level = 3;
    std::int64_t numerator_max = 12;
};

struct Scenario {
    std::string name;
    std::string description;
    std::uint64_t seed = 0;
    std::optional<GroupSpecModel> group;
    std::optional<AutoSpecModel> automorphism;
    GridSpecModel grid;
    SolenoidPointsModel solenoid_points;
    double tol_grid = 1e-9;
    double tol_exact = 1e-12;
    std::vector<std::pair<std::string, DistSpecModel>> dists;
    std::vector<CheckSpecModel> checks;
};

/// Parse and validate scenario text. `fallback_name` is used when the file
/// does not set one. Throws ParseError / ValidationError.
Scenario parse_scenario(const std::string& text, const std::string& fallback_name);

Scenario load_scenario_file(const std::string& path);

/// Map a boolean or string `expect` value onto the verdict vocabulary of the
/// given check kind ("holds"/"fails", "true"/"false", ...).
std::string normalize_expect(const std::string& kind, const KvValue& value,
                             const std::string& where);

} // namespace heyde
