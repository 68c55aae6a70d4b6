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

#include <cmath>

#include "heyde/checks.hpp"
#include "heyde/rng.hpp"

using namespace heyde;

TEST_CASE("symmetry equation: degenerate pair always passes") {
    const FiniteAbelianGroup z7 = FiniteAbelianGroup::cyclic(7);
    const FiniteDist e0 = FiniteDist::point_mass(z7, z7.zero());
    const Homomorphism alpha = Homomorphism::scalar(z7, 3);
    const Eq2Result res = eq2_exact(dft(e0), dft(e0), alpha.adjoint());
    CHECK(res.holds);
    CHECK(res.max_residual < 1e-15);
}

TEST_CASE("symmetry equation: skewed pair on Z(5) fails and matches the oracle") {
    const FiniteAbelianGroup z5 = FiniteAbelianGroup::cyclic(5);
    const FiniteDist mu(z5, {0.4, 0.15, 0.15, 0.15, 0.15});
    const Homomorphism alpha = Homomorphism::scalar(z5, 2);
    const Eq2Result res = eq2_exact(dft(mu), dft(mu), alpha.adjoint());
    CHECK_FALSE(res.holds);
    CHECK_FALSE(res.witness.empty());
    CHECK_FALSE(conditional_symmetry_exact(mu, mu, alpha));
}

TEST_CASE("symmetry equation: two-torsion support passes and matches the oracle") {
    const FiniteAbelianGroup g({2, 2});
    const Homomorphism alpha(g, g, {{0, 1}, {1, 1}});
    std::vector<double> p(4, 0.0);
    p[g.rank_of(Coords{0, 0})] = 0.5;
    p[g.rank_of(Coords{1, 1})] = 0.5;
    const FiniteDist mu(g, p);
    CHECK(eq2_exact(dft(mu), dft(mu), alpha.adjoint()).holds);
    CHECK(conditional_symmetry_exact(mu, mu, alpha));
}

TEST_CASE("symmetry oracle on a uniform pair with a degenerate one-plus-alpha") {
    // alpha = 2 on Z(3): I + alpha annihilates everything; the oracle is
    // still defined and reports symmetry for the uniform pair.
    const FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);
    const Homomorphism alpha = Homomorphism::scalar(z3, 2);
    const FiniteDist u = FiniteDist::uniform(z3);
    CHECK(conditional_symmetry_exact(u, u, alpha));
    CHECK(eq2_exact(dft(u), dft(u), alpha.adjoint()).holds);
    CHECK(eq2_exact(dft(u), dft(u), alpha.adjoint()).vanishing_warning);
}

TEST_CASE("oracle agreement on seeded random instances") {
    const OracleFuzzOutcome out = run_oracle_fuzz(40, 36, 12345);
    CHECK(out.instances == 40);
    CHECK(out.disagreements == 0);
    CHECK(out.agreements == 40);
    CHECK(out.eq2_true > 4); // the family mix guarantees passing instances
    CHECK(out.eq5_violations == 0);
}

TEST_CASE("derived product equation on explicitly constructed pairs") {
    const FiniteAbelianGroup g({2, 3});
    Rng rng(77);
    const Homomorphism alpha = random_automorphism(rng, g);
    // Two-torsion-supported pair passes the symmetry equation, hence the
    // product equation.
    std::vector<double> p(6, 0.0);
    p[g.rank_of(Coords{0, 0})] = 0.6;
    p[g.rank_of(Coords{1, 0})] = 0.4;
    const FiniteDist mu(g, p);
    const FiniteCharFn c = dft(mu);
    REQUIRE(eq2_exact(c, c, alpha.adjoint()).holds);
    CHECK(eq5_check(c, c, alpha.adjoint()).holds);

    const FiniteDist e0 = FiniteDist::point_mass(g, g.zero());
    CHECK(eq5_check(dft(e0), dft(e0), alpha.adjoint()).holds);
}

TEST_CASE("real-line closed form: residual vanishes exactly when the relation holds") {
    Rng rng(31337);
    const GridSpec grid;
    for (int t = 0; t < 12; ++t) {
        // Nonnegative decay rates on both sides force a negative action.
        const double a = -(0.5 + 2.0 * rng.uniform01());
        const double sigma2 = 0.3 + rng.uniform01();
        const double b2 = rng.uniform(-1.0, 1.0);
        const double sigma1 = -a * sigma2;
        const double b1 = -a * b2;
        const RealAuto alpha = RealAuto::scalar(a);
        const Eq2Result ok =
            eq2_grid(real_gauss(sigma1, b1), real_gauss(sigma2, b2), alpha, grid);
        CHECK(ok.holds);

        const Eq2Result bad_sigma =
            eq2_grid(real_gauss(sigma1 + 0.2, b1), real_gauss(sigma2, b2), alpha, grid);
        CHECK_FALSE(bad_sigma.holds);
        const Eq2Result bad_b =
            eq2_grid(real_gauss(sigma1, b1 + 0.5), real_gauss(sigma2, b2), alpha, grid);
        CHECK_FALSE(bad_b.holds);
    }
}

TEST_CASE("plane pair with coupled covariances satisfies the symmetry equation") {
    const FourierGaussCharFn mu1 = plane_gauss({{{4.0, 2.0}, {2.0, 2.0}}});
    const FourierGaussCharFn mu2 = plane_gauss({{{2.0, 1.0}, {1.0, 1.0}}});
    const RealAuto alpha = RealAuto::matrix({{{-2.0, 0.0}, {0.0, -2.0}}});
    const GridSpec grid{-2.0, 2.0, 0.25};
    const Eq2Result res = eq2_grid(mu1, mu2, alpha, grid);
    CHECK(res.holds);
    CHECK(res.max_residual < 1e-12);

    // Perturbing one matrix breaks it.
    const FourierGaussCharFn off = plane_gauss({{{2.5, 1.0}, {1.0, 1.0}}});
    CHECK_FALSE(eq2_grid(mu1, off, alpha, grid).holds);
}

TEST_CASE("two-sigma family pair under the matched relation") {
    const FourierGaussCharFn mu1 = gauss_z2_family(2.0, 1.0, 0.5);
    const FourierGaussCharFn mu2 = gauss_z2_family(1.0, 0.5, 0.5);
    const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    const RealAuto alpha = RealAuto::scalar(-2.0, Homomorphism::identity(z2));
    const GridSpec grid;
    CHECK(eq2_grid(mu1, mu2, alpha, grid).holds);

    // 10% perturbation of one decay rate produces a witnessed failure.
    const FourierGaussCharFn bad = gauss_z2_family(2.0, 1.1, 0.5);
    const Eq2Result res = eq2_grid(bad, mu2, alpha, grid);
    CHECK_FALSE(res.holds);
    CHECK(res.max_residual > 1e-4);
    CHECK_FALSE(res.witness.empty());
}

TEST_CASE("solenoid pairs under the multiplier action") {
    const SolenoidSpec spec({2, 3}, {2, 3});
    const auto pts = solenoid_dual_points(spec, 3, 12);
    const SolenoidAutomorphism neg_third = make_solenoid_automorphism(spec, -1, 3);
    CHECK(eq2_grid_solenoid(SolenoidGaussCharFn(0.0, 1.0), SolenoidGaussCharFn(0.0, 3.0),
                            neg_third, pts)
              .holds);
    CHECK_FALSE(eq2_grid_solenoid(SolenoidGaussCharFn(0.0, 1.0), SolenoidGaussCharFn(0.0, 2.0),
                                  neg_third, pts)
                    .holds);

    const SolenoidAutomorphism third = make_solenoid_automorphism(spec, 1, 3);
    CHECK(eq2_grid_solenoid(SolenoidGaussCharFn(-1.0, 0.0), SolenoidGaussCharFn(3.0, 0.0),
                            third, pts)
              .holds);
}

TEST_CASE("kernel condition on real-extended groups") {
    const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    const Cond1Real fails =
        check_condition1(RealAuto::scalar(-2.0, Homomorphism::identity(z2)), z2);
    CHECK_FALSE(fails.holds);
    CHECK(fails.finite_kernel_order == 2);
    CHECK(fails.real_determinant == doctest::Approx(-1.0));

    const FiniteAbelianGroup z2sq({2, 2});
    const Cond1Real mixes = check_condition1(
        RealAuto::scalar(-2.0, Homomorphism(z2sq, z2sq, {{0, 1}, {1, 1}})), z2sq);
    CHECK(mixes.holds);

    const Cond1Real plane = check_condition1(RealAuto::matrix({{{-2.0, 0.0}, {0.0, -2.0}}}),
                                             FiniteAbelianGroup::trivial());
    CHECK(plane.holds);
    const Cond1Real reflect = check_condition1(RealAuto::scalar(-1.0),
                                               FiniteAbelianGroup::trivial());
    CHECK_FALSE(reflect.holds);
}

TEST_CASE("chi-square tail probability") {
    // Frozen reference values for the upper tail Q(df/2, x/2).
    CHECK(gamma_q(0.5, 1.92072941 / 2.0) == doctest::Approx(0.1658).epsilon(1e-3));
    CHECK(gamma_q(2.5, 11.0705 / 2.0) == doctest::Approx(0.05).epsilon(1e-3));
    CHECK(gamma_q(5.0, 9.34182 / 2.0) == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(gamma_q(1.0, 0.0) == doctest::Approx(1.0));
    CHECK(gamma_q(500.0, 500.0) == doctest::Approx(0.4941).epsilon(1e-2));
    CHECK(gamma_q(500.0, 700.0) < 1e-8);
}

TEST_CASE("Monte Carlo symmetry check distinguishes the matched and perturbed family") {
    const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    const RealAuto alpha = RealAuto::scalar(-2.0, Homomorphism::identity(z2));
    const RealExtSampler mu1(gauss_z2_family(2.0, 1.0, 0.5));
    const RealExtSampler mu2(gauss_z2_family(1.0, 0.5, 0.5));

    const SymmetryMcResult ok = conditional_symmetry_mc(mu1, mu2, alpha, 100000, 16, 99);
    CHECK(ok.consistent);
    CHECK(ok.p_value > 0.01);

    const RealExtSampler bad(gauss_z2_family(2.0, 1.5, 0.5));
    const SymmetryMcResult detected =
        conditional_symmetry_mc(bad, mu2, alpha, 100000, 16, 99);
    CHECK_FALSE(detected.consistent);
    CHECK(detected.p_value < 0.01);
}

TEST_CASE("symmetry oracle on degenerate pairs") {
    const FiniteAbelianGroup z7 = FiniteAbelianGroup::cyclic(7);
    const FiniteDist e0 = FiniteDist::point_mass(z7, z7.zero());
    CHECK(conditional_symmetry_exact(e0, e0, Homomorphism::scalar(z7, 3)));
}

TEST_CASE("eq2 residual field is symmetric under negating v") {
    Rng rng(606);
    const FiniteAbelianGroup g({4, 3});
    const Homomorphism alpha = random_automorphism(rng, g);
    const Homomorphism adj = alpha.adjoint();
    const FiniteCharFn c1 = dft(random_simplex_dist(rng, g));
    const FiniteCharFn c2 = dft(random_simplex_dist(rng, g));
    // Swapping v for -v swaps the two sides of the difference.
    for (std::uint64_t u = 0; u < g.order(); ++u)
        for (std::uint64_t v = 0; v < g.order(); ++v) {
            const auto residual_at = [&](std::uint64_t uu, std::uint64_t vv) {
                const std::uint64_t av = adj.apply_rank(vv);
                const Complex lhs = c1.values[g.rank_add(uu, vv)] *
                                    c2.values[g.rank_add(uu, av)];
                const Complex rhs = c1.values[g.rank_add(uu, g.rank_neg(vv))] *
                                    c2.values[g.rank_add(uu, g.rank_neg(av))];
                return std::abs(lhs - rhs);
            };
            CHECK(residual_at(u, v) == doctest::Approx(residual_at(u, g.rank_neg(v)))
                                           .epsilon(1e-12));
        }
}

TEST_CASE("product equation evaluates on failing pairs without implication") {
    const FiniteAbelianGroup z5 = FiniteAbelianGroup::cyclic(5);
    const FiniteDist mu(z5, {0.4, 0.15, 0.15, 0.15, 0.15});
    const Homomorphism adj = Homomorphism::scalar(z5, 2).adjoint();
    REQUIRE_FALSE(eq2_exact(dft(mu), dft(mu), adj).holds);
    const Eq5Result res = eq5_check(dft(mu), dft(mu), adj);
    CHECK(res.max_residual >= 0.0); // recorded, no implication either way
}

TEST_CASE("Monte Carlo on a degenerate pair is trivially consistent") {
    const RealAuto alpha = RealAuto::scalar(-2.0);
    const RealExtSampler e0(real_gauss(0.0, 0.0));
    const SymmetryMcResult res = conditional_symmetry_mc(e0, e0, alpha, 10000, 32, 1);
    CHECK(res.consistent);
    CHECK(res.p_value == doctest::Approx(1.0));
}

TEST_CASE("Monte Carlo symmetry check is deterministic for fixed seed and workers") {
    const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    const RealAuto alpha = RealAuto::scalar(-2.0, Homomorphism::identity(z2));
    const RealExtSampler mu1(gauss_z2_family(2.0, 1.0, 0.5));
    const RealExtSampler mu2(gauss_z2_family(1.0, 0.5, 0.5));
    const SymmetryMcResult a = conditional_symmetry_mc(mu1, mu2, alpha, 20000, 8, 5, 2);
    const SymmetryMcResult b = conditional_symmetry_mc(mu1, mu2, alpha, 20000, 8, 5, 2);
    CHECK(a.statistic == b.statistic);
    CHECK(a.p_value == b.p_value);
    CHECK(a.df == b.df);
}

TEST_CASE("grid specification") {
    const GridSpec grid;
    CHECK(grid.points().size() == 33);
    CHECK(grid.points().front() == doctest::Approx(-4.0));
    CHECK(grid.points().back() == doctest::Approx(4.0));
    CHECK_THROWS_AS((GridSpec{0.0, 1.0, -1.0}.points()), ValidationError);
}
