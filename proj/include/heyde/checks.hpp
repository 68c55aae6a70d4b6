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
#include <string>
#include <vector>

#include "heyde/dist.hpp"
#include "heyde/extended.hpp"
#include "heyde/group.hpp"

namespace heyde {

/// Uniform real grid used by closed-form checks.
struct GridSpec {
    double min = -4.0;
    double max = 4.0;
    double step = 0.25;

    std::vector<double> points() const;
};

/// Block-diagonal automorphism of R^d x F: scalar action a (d = 1) or a 2x2
/// matrix (d = 2) on the real part, together with an automorphism of the
/// finite part.
struct RealAuto {
    int real_dim = 1;
    double a = 1.0;
    std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};
    std::optional<Homomorphism> finite; // automorphism of F; may be absent when F is trivial

    static RealAuto scalar(double a, std::optional<Homomorphism> finite = std::nullopt);
    static RealAuto matrix(const std::array<std::array<double, 2>, 2>& m);
};

struct Cond1Real {
    bool holds = false;
    double real_determinant = 0.0;        // det(I + real action)
    std::uint64_t finite_kernel_order = 1;
};

/// Ker(I + alpha) = {0} on R^d x F; the kernel splits as
/// (real kernel) x (finite kernel).
Cond1Real check_condition1(const RealAuto& alpha, const FiniteAbelianGroup& finite_part);

// ---------------------------------------------------------------------------

struct Eq2Result {
    bool holds = false;
    double max_residual = 0.0;
    std::string witness;            // maximizing pair when violated
    bool vanishing_warning = false; // a characteristic function vanishes on the domain
};

/// Exhaustive residual of
///   f1(u+v) f2(u+Av) - f1(u-v) f2(u-Av)
/// over all dual pairs (u, v), where A is the dual-side automorphism
/// (typically adjoint(alpha)).
Eq2Result eq2_exact(const FiniteCharFn& f1, const FiniteCharFn& f2,
                    const Homomorphism& alpha_dual, double tol = 1e-9);

/// Same residual for closed-form characteristic functions on R^d x F over a
/// real grid times the exhaustive finite dual. `alpha` acts on the primal
/// side; its dual action (transpose / finite adjoint) is derived here.
Eq2Result eq2_grid(const FourierGaussCharFn& f1, const FourierGaussCharFn& f2,
                   const RealAuto& alpha, const GridSpec& grid, double tol = 1e-9);

/// Same residual on a solenoid dual over an explicit point list; alpha acts
/// on dual points as multiplication by p/q.
Eq2Result eq2_grid_solenoid(const SolenoidGaussCharFn& f1, const SolenoidGaussCharFn& f2,
                            const SolenoidAutomorphism& alpha, std::span<const Rational> points,
                            double tol = 1e-9);

struct Eq5Result {
    bool holds = false;
    double max_residual = 0.0;
};

/// Exhaustive residual of the derived product equation
///   f1((I+A)u + 2v) f2(2Au + (I+A)v) - f1((I+A)u) f2(2Au) f1(2v) f2((I+A)v)
/// over all dual pairs, with A the dual-side automorphism.
Eq5Result eq5_check(const FiniteCharFn& f1, const FiniteCharFn& f2,
                    const Homomorphism& alpha_dual, double tol = 1e-9);

/// Exact symmetry oracle, computed from first principles: enumerates the
/// joint law of (L1, L2) = (x1 + x2, x1 + alpha x2) and tests
/// p(l1, l2) == p(l1, -l2) within tol.
bool conditional_symmetry_exact(const FiniteDist& mu1, const FiniteDist& mu2,
                                const Homomorphism& alpha, double tol = 1e-12);

// ---------------------------------------------------------------------------

struct SymmetryMcResult {
    double p_value = 1.0;
    bool consistent = true; // p_value > 0.01
    double statistic = 0.0;
    int df = 0;
    int cells = 0;
    int pooled_cells = 0; // low-count cells merged into one
    std::size_t samples = 0;
};

/// Monte Carlo surrogate for the symmetry condition on R x F: draws N
/// independent pairs, forms (L1, L2) and (L1, -L2), bins both into identical
/// (real-quantile x finite) cells and runs a two-sample chi-square test.
/// Low-count cells (expected < 5) are pooled. Output is fully determined by
/// (seed, workers).
SymmetryMcResult conditional_symmetry_mc(const RealExtSampler& xi1, const RealExtSampler& xi2,
                                         const RealAuto& alpha, std::size_t n, int bins_per_axis,
                                         std::uint64_t seed, int workers = 1);

/// Upper regularized incomplete gamma Q(a, x); the chi-square tail
/// probability is Q(df/2, stat/2).
double gamma_q(double a, double x);

// ---------------------------------------------------------------------------

struct FuzzInstance {
    FiniteAbelianGroup group;
    Homomorphism alpha;
    FiniteDist mu1;
    FiniteDist mu2;
    int mode = 0;
};

/// Seeded random instance for the oracle-agreement suite: a random group of
/// order <= max_order, a random automorphism, and a distribution pair drawn
/// from one of four families (near-degenerate strictly positive mixtures,
/// unconstrained, two-torsion supported, point masses). `force_mode` pins
/// the family.
FuzzInstance make_fuzz_instance(Rng& rng, std::uint64_t max_order, int force_mode = -1);

Homomorphism random_automorphism(Rng& rng, const FiniteAbelianGroup& g, int tries = 400);
FiniteDist random_simplex_dist(Rng& rng, const FiniteAbelianGroup& g);

struct OracleFuzzOutcome {
    int instances = 0;
    int agreements = 0;
    int disagreements = 0;
    int eq2_true = 0;
    int eq5_checked = 0;
    int eq5_violations = 0;
    double max_eq5_residual = 0.0;
    std::string first_failure;
};

/// Runs `instances` seeded random instances and compares eq2_exact with the
/// exact symmetry oracle on every one; eq2-passing instances are also pushed
/// through eq5_check.
OracleFuzzOutcome run_oracle_fuzz(int instances, std::uint64_t max_order, std::uint64_t seed,
                                  double tol_exact = 1e-12, double tol_grid = 1e-9);

} // namespace heyde
