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

// Acceptance suite: every criterion prints one pass/fail line with its wall
// time; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "heyde/checks.hpp"
#include "heyde/rng.hpp"
#include "heyde/structure.hpp"

using namespace heyde;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
    double budget_seconds;
};

bool within(double value, double target, double tol) {
    return std::abs(value - target) < tol;
}

// 1. The characteristic-function equation agrees with the exact symmetry
// oracle on 100 seeded random instances of order <= 64.
bool oracle_equivalence(std::string& detail) {
    const OracleFuzzOutcome out = run_oracle_fuzz(100, 64, 20260810, 1e-12, 1e-9);
    detail = "agreements " + std::to_string(out.agreements) + "/100, equation holds on " +
             std::to_string(out.eq2_true);
    if (!out.first_failure.empty()) detail += "; " + out.first_failure;
    return out.instances == 100 && out.disagreements == 0 && out.eq2_true >= 10;
}

// 2. Every equation-passing instance of the same suite satisfies the derived
// product equation.
bool product_equation_implication(std::string& detail) {
    const OracleFuzzOutcome out = run_oracle_fuzz(100, 64, 20260810, 1e-12, 1e-9);
    detail = "checked " + std::to_string(out.eq5_checked) + " passing instances, max residual " +
             std::to_string(out.max_eq5_residual);
    return out.eq5_checked >= 10 && out.eq5_violations == 0;
}

// 3. Plane pair with coupled covariance matrices: equation holds on the
// default grid, factorization fails with a cross-term certificate.
bool plane_counterexample(std::string& detail) {
    const FourierGaussCharFn mu1 = plane_gauss({{{4.0, 2.0}, {2.0, 2.0}}});
    const FourierGaussCharFn mu2 = plane_gauss({{{2.0, 1.0}, {1.0, 1.0}}});
    const RealAuto alpha = RealAuto::matrix({{{-2.0, 0.0}, {0.0, -2.0}}});
    const GridSpec grid;
    const Eq2Result eq2 = eq2_grid(mu1, mu2, alpha, grid, 1e-9);
    const DecomposeResult dec1 = decompose_plane(mu1, grid);
    const DecomposeResult dec2 = decompose_plane(mu2, grid);
    detail = "equation residual " + std::to_string(eq2.max_residual);
    const auto cross_certified = [](const DecomposeResult& d) {
        const DecomposeStep* s = d.step("product_form");
        return !d.success && s != nullptr && !s->passed &&
               s->note.find("cross term") != std::string::npos;
    };
    return eq2.holds && cross_certified(dec1) && cross_certified(dec2);
}

// 4. Two-sigma family with matched parameters: kernel condition fails, the
// equation and the pd inequality hold, factorization fails at the product
// form.
bool coupled_family_counterexample(std::string& detail) {
    const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    const FourierGaussCharFn mu1 = gauss_z2_family(2.0, 1.0, 0.5);
    const FourierGaussCharFn mu2 = gauss_z2_family(1.0, 0.5, 0.5);
    const RealAuto alpha = RealAuto::scalar(-2.0, Homomorphism::identity(z2));
    const GridSpec grid;

    const Cond1Real cond1 = check_condition1(alpha, z2);
    const Eq2Result eq2 = eq2_grid(mu1, mu2, alpha, grid, 1e-9);
    const PdCheckResult pd1 = pd_inequality(mu1, grid.points());
    const PdCheckResult pd2 = pd_inequality(mu2, grid.points());
    const DecomposeResult dec1 = decompose(mu1, two_torsion(z2), grid);
    const DecomposeResult dec2 = decompose(mu2, two_torsion(z2), grid);

    detail = "kernel order " + std::to_string(cond1.finite_kernel_order) +
             ", equation residual " + std::to_string(eq2.max_residual);
    const auto fails_at_product = [](const DecomposeResult& d) {
        if (d.success) return false;
        for (const DecomposeStep& s : d.certificate)
            if (!s.passed) return s.name == "product_form";
        return false;
    };
    return !cond1.holds && cond1.finite_kernel_order == 2 && eq2.holds && pd1.holds &&
           pd2.holds && fails_at_product(dec1) && fails_at_product(dec2);
}

// 5. 25 seeded constructions (Gaussian x torsion measure x shift) on
// R x Z(2), R x Z(2)^2 and R x Z(2) x Z(3): the equation holds and the
// factorization recovers sigma to 1e-9.
bool roundtrip_constructions(std::string& detail) {
    Rng rng(424242);
    const std::vector<Coords> shapes = {{2}, {2, 2}, {2, 3}};
    const GridSpec grid;
    double worst_sigma_err = 0.0;
    for (int i = 0; i < 25; ++i) {
        const FiniteAbelianGroup f(shapes[static_cast<std::size_t>(i) % shapes.size()]);
        const Subgroup torsion = two_torsion(f);

        const double a = -(0.5 + 1.5 * rng.uniform01());
        const double sigma2 = 0.3 + 0.7 * rng.uniform01();
        const double sigma1 = -a * sigma2;
        const double t2 = rng.uniform(-1.0, 1.0);
        const double t1 = -a * t2;

        const auto torsion_dist = [&](double floor) {
            std::vector<double> p(f.order(), 0.0);
            double sum = 0.0;
            for (std::uint64_t r : torsion.ranks()) {
                p[r] = floor - std::log(1.0 - rng.uniform01());
                sum += p[r];
            }
            for (std::uint64_t r : torsion.ranks()) p[r] /= sum;
            return FiniteDist(f, p);
        };
        const Coords g1 = f.element(torsion.ranks()[rng.below(torsion.size())]);
        const Coords g2 = f.element(torsion.ranks()[rng.below(torsion.size())]);
        const FourierGaussCharFn mu1 =
            product_with_finite(real_gauss(sigma1, t1), torsion_dist(0.05).shift(g1));
        const FourierGaussCharFn mu2 =
            product_with_finite(real_gauss(sigma2, t2), torsion_dist(0.05).shift(g2));

        const RealAuto alpha = RealAuto::scalar(a, random_automorphism(rng, f));
        const Eq2Result eq2 = eq2_grid(mu1, mu2, alpha, grid, 1e-9);
        if (!eq2.holds) {
            detail = "construction " + std::to_string(i) + " on " + f.describe() +
                     " violates the equation (residual " + std::to_string(eq2.max_residual) +
                     ")";
            return false;
        }
        const DecomposeResult d1 = decompose(mu1, torsion, grid);
        const DecomposeResult d2 = decompose(mu2, torsion, grid);
        if (!d1.success || !d2.success) {
            detail = "construction " + std::to_string(i) + " on " + f.describe() +
                     " failed to factor";
            return false;
        }
        worst_sigma_err = std::max(worst_sigma_err, std::abs(d1.sigma - sigma1));
        worst_sigma_err = std::max(worst_sigma_err, std::abs(d2.sigma - sigma2));
        if (!within(d1.sigma, sigma1, 1e-9) || !within(d2.sigma, sigma2, 1e-9)) {
            detail = "construction " + std::to_string(i) + ": sigma error " +
                     std::to_string(worst_sigma_err);
            return false;
        }
    }
    detail = "25 constructions, worst sigma error " + std::to_string(worst_sigma_err);
    return true;
}

// 6. 50 random non-constant functions on Z(n), n <= 12, fail the polynomial
// test at degrees 1..4; constants pass.
bool polynomial_realization(std::string& detail) {
    Rng rng(5150);
    for (int i = 0; i < 50; ++i) {
        const Coord n = 2 + static_cast<Coord>(rng.below(11));
        const FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(n);
        DualFn f = DualFn::zero(g);
        double lo = 1.0, hi = 0.0;
        do {
            lo = 1.0;
            hi = 0.0;
            for (auto& v : f.values) {
                v = Complex{rng.uniform01(), 0.0};
                lo = std::min(lo, v.real());
                hi = std::max(hi, v.real());
            }
        } while (hi - lo < 0.05);
        for (int deg = 1; deg <= 4; ++deg) {
            if (is_polynomial(f, deg, 1e-9)) {
                detail = "non-constant function on Z(" + std::to_string(n) +
                         ") passed at degree " + std::to_string(deg);
                return false;
            }
        }
    }
    for (Coord n = 2; n <= 12; ++n) {
        const FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(n);
        DualFn f = DualFn::zero(g);
        for (auto& v : f.values) v = Complex{0.37, 0.0};
        for (int deg = 1; deg <= 4; ++deg) {
            if (!is_polynomial(f, deg, 1e-9)) {
                detail = "constant on Z(" + std::to_string(n) + ") failed at degree " +
                         std::to_string(deg);
                return false;
            }
        }
    }
    detail = "50 non-constant functions rejected, constants accepted";
    return true;
}

// 7. For 20 equation-passing instances the cubed differences of both derived
// functionals vanish on the doubled dual.
bool functional_pipeline(std::string& detail) {
    Rng rng(31415);
    double worst = 0.0;
    int done = 0;
    int attempts = 0;
    while (done < 20) {
        if (++attempts > 2000) {
            detail = "could not assemble 20 instances";
            return false;
        }
        const FuzzInstance inst = make_fuzz_instance(rng, 64, 2);
        const FiniteCharFn c1 = dft(inst.mu1);
        const FiniteCharFn c2 = dft(inst.mu2);
        if (std::min(c1.min_modulus(), c2.min_modulus()) < 1e-3) continue;
        if (!eq2_exact(c1, c2, inst.alpha.adjoint(), 1e-9).holds) {
            detail = "torsion-supported instance unexpectedly fails the equation";
            return false;
        }
        const PqPipelineResult res = pq_pipeline(inst.mu1, inst.mu2, inst.alpha);
        if (!res.applicable) continue;
        worst = std::max({worst, res.max_delta3_p, res.max_delta3_q});
        ++done;
    }
    detail = "20 instances, max cubed-difference residual " + std::to_string(worst);
    return worst < 1e-9;
}

// 8. On Z(n), n <= 12, only the zero function satisfies the quadratic
// functional equation.
bool quadratic_degeneracy(std::string& detail) {
    Rng rng(2718);
    int rejected = 0;
    for (Coord n = 2; n <= 12; ++n) {
        const FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(n);
        if (!gaussian_phi_check(DualFn::zero(g), 1e-9)) {
            detail = "zero function rejected on Z(" + std::to_string(n) + ")";
            return false;
        }
        for (Coord y0 = 1; y0 < n; ++y0) {
            DualFn f = DualFn::zero(g);
            f.values[static_cast<std::size_t>(y0)] = Complex{1.0, 0.0};
            if (gaussian_phi_check(f, 1e-9)) {
                detail = "indicator accepted on Z(" + std::to_string(n) + ")";
                return false;
            }
            ++rejected;
        }
        for (int k = 0; k < 8; ++k) {
            DualFn f = DualFn::zero(g);
            double hi = 0.0;
            for (std::size_t y = 1; y < f.values.size(); ++y) {
                f.values[y] = Complex{rng.uniform01(), 0.0};
                hi = std::max(hi, f.values[y].real());
            }
            if (hi < 0.1) continue;
            if (gaussian_phi_check(f, 1e-9)) {
                detail = "random nonzero function accepted on Z(" + std::to_string(n) + ")";
                return false;
            }
            ++rejected;
        }
    }
    detail = std::to_string(rejected) + " nonzero candidates rejected, zero accepted";
    return true;
}

// 9. Monte Carlo surrogate at one million samples: the matched family is
// consistent with symmetry, the 10%-perturbed one is refuted. Eight
// quantile bins per real axis: the 10% signal carries a noncentrality near
// 120, which clears the chi-square noise floor at 8 bins (510 cells) but
// not at 32 (4000+ cells).
bool monte_carlo_consistency(std::string& detail) {
    const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    const RealAuto alpha = RealAuto::scalar(-2.0, Homomorphism::identity(z2));
    const int bins = 8;
    const RealExtSampler mu1(gauss_z2_family(2.0, 1.0, 0.5));
    const RealExtSampler mu2(gauss_z2_family(1.0, 0.5, 0.5));
    const SymmetryMcResult matched =
        conditional_symmetry_mc(mu1, mu2, alpha, 1000000, bins, 20260810);
    const RealExtSampler perturbed(gauss_z2_family(2.0, 1.1, 0.5));
    const SymmetryMcResult refuted =
        conditional_symmetry_mc(perturbed, mu2, alpha, 1000000, bins, 20260810);
    // The half-again perturbed family must be refuted at the default
    // binning of 32 as well.
    const RealExtSampler gross(gauss_z2_family(2.0, 1.5, 0.5));
    const SymmetryMcResult gross_refuted =
        conditional_symmetry_mc(gross, mu2, alpha, 1000000, 32, 20260810);
    detail = "matched p=" + std::to_string(matched.p_value) +
             ", 10%-perturbed p=" + std::to_string(refuted.p_value) +
             " (8 bins/axis), 50%-perturbed p=" + std::to_string(gross_refuted.p_value) +
             " (default bins)";
    return matched.p_value > 0.01 && refuted.p_value < 0.01 && gross_refuted.p_value < 0.01;
}

// 10. Solenoid dual over the primes 2 and 3: the kernel rule with
// truncation-level evidence, and Gaussian pairs under the matched relation
// pass the equation on dual points of level <= 3.
bool solenoid_checks(std::string& detail) {
    const SolenoidSpec spec({2, 3}, {2, 3});
    const auto pts = solenoid_dual_points(spec, 3, 12);

    const SolenoidCond1 third = solenoid_condition1(spec, make_solenoid_automorphism(spec, 1, 3));
    const SolenoidCond1 two_thirds =
        solenoid_condition1(spec, make_solenoid_automorphism(spec, 2, 3));
    bool evidence_ok = !two_thirds.evidence.empty();
    for (const SolenoidCond1Evidence& ev : two_thirds.evidence)
        evidence_ok = evidence_ok && !ev.generator_divisible;

    // sigma1 + a sigma2 = 0 with positive rates needs the negative
    // automorphism -1/3; the positive 1/3 carries the degenerate pair with
    // the matching shift relation t1 + a t2 = 0.
    const Eq2Result gauss_pair =
        eq2_grid_solenoid(SolenoidGaussCharFn(0.0, 1.0), SolenoidGaussCharFn(0.0, 3.0),
                          make_solenoid_automorphism(spec, -1, 3), pts, 1e-9);
    const Eq2Result shifted_pair =
        eq2_grid_solenoid(SolenoidGaussCharFn(-1.0, 0.0), SolenoidGaussCharFn(3.0, 0.0),
                          make_solenoid_automorphism(spec, 1, 3), pts, 1e-9);

    detail = "quotient orders " + std::to_string(third.kernel_order) + "/" +
             std::to_string(two_thirds.kernel_order) + ", pair residual " +
             std::to_string(gauss_pair.max_residual) + " over " +
             std::to_string(pts.size()) + " dual points";
    return third.holds && !two_thirds.holds && two_thirds.kernel_order == 5 && evidence_ok &&
           gauss_pair.holds && shifted_pair.holds;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"oracle equivalence on 100 random instances", oracle_equivalence, 60.0},
        {"derived product equation on passing instances", product_equation_implication, 60.0},
        {"plane counterexample: equation holds, factorization fails", plane_counterexample,
         5.0},
        {"coupled family: kernel fails, equation holds, no product form",
         coupled_family_counterexample, 5.0},
        {"factorization roundtrip on 25 constructions", roundtrip_constructions, 60.0},
        {"polynomials on cyclic groups are constant", polynomial_realization, 5.0},
        {"cubed differences vanish for derived functionals", functional_pipeline, 60.0},
        {"quadratic functional equation forces zero", quadratic_degeneracy, 60.0},
        {"Monte Carlo symmetry at one million samples", monte_carlo_consistency, 60.0},
        {"solenoid kernel rule and Gaussian pairs", solenoid_checks, 60.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budget_seconds) {
            ok = false;
            detail += " [over time budget " + std::to_string(c.budget_seconds) + "s]";
        }
        std::printf("[%s] %s (%.2fs) %s\n", ok ? "PASS" : "FAIL", c.name.c_str(), elapsed,
                    detail.c_str());
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
}
