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

#include <functional>
#include <string>
#include <vector>

#include "heyde/checks.hpp"
#include "heyde/dist.hpp"
#include "heyde/group.hpp"

namespace heyde {

/// Function on a finite dual group, tabulated by dual rank.
struct DualFn {
    FiniteAbelianGroup dual;
    std::vector<Complex> values;

    static DualFn zero(const FiniteAbelianGroup& g);
    Complex at_rank(std::uint64_t r) const { return values[r]; }
    double max_abs() const;
};

/// Difference operator: (D_h f)(y) = f(y + h) - f(y).
DualFn finite_difference(const DualFn& f, std::span<const Coord> h);

/// Degree test: D_h^n f == 0 for every h, exhaustively.
bool is_polynomial(const DualFn& f, int n, double tol = 1e-9);

/// The two functionals built from psi_j = -log of the symmetrized
/// characteristic functions and the dual automorphism A:
///   P(y) = psi1((I+A) y) + psi2(2A y),
///   Q(y) = psi1(2 y)     + psi2((I+A) y).
std::pair<DualFn, DualFn> build_pq(const DualFn& psi1, const DualFn& psi2,
                                   const Homomorphism& alpha_dual);

/// Max of |D_h^3 f(y)| over h and y running through the doubled subgroup
/// 2Y (the image of multiplication by 2).
double max_delta3_on_doubled(const DualFn& f);

struct PqPipelineResult {
    bool applicable = false; // symmetrized characteristic functions stay positive
    double min_modulus = 0.0;
    double max_delta3_p = 0.0;
    double max_delta3_q = 0.0;
};

/// End-to-end: nu_j = mu_j * reflect(mu_j), psi_j = -log nu_j-hat, build P/Q
/// and measure the cubed differences on 2Y.
PqPipelineResult pq_pipeline(const FiniteDist& mu1, const FiniteDist& mu2,
                             const Homomorphism& alpha);

struct SupportLocalizeResult {
    bool holds = false;        // mu-hat == 1 on all of H
    double max_deviation = 0.0;
    bool support_verified = false; // support contained in the annihilator (checked when holds)
};

/// If mu-hat equals 1 on the dual subgroup H, the support of mu lies in the
/// annihilator of H; verified by enumeration.
SupportLocalizeResult support_localize(const FiniteDist& mu, const Subgroup& h,
                                       double tol = 1e-12);

/// Quadratic functional equation phi(u+v) + phi(u-v) = 2 phi(u) + 2 phi(v),
/// exhaustively on a finite dual. phi must be real and nonnegative.
bool gaussian_phi_check(const DualFn& phi, double tol = 1e-9);

/// Same equation on a real grid for a closed-form phi.
bool gaussian_phi_check(const std::function<double(double)>& phi, std::span<const double> grid,
                        double tol = 1e-9);

// ---------------------------------------------------------------------------

struct DecomposeStep {
    std::string name;
    double residual = 0.0;
    bool passed = false;
    std::string note;
};

struct DecomposeResult {
    bool success = false;
    double sigma = 0.0; // fitted Gaussian exponent coefficient
    double b = 0.0;     // fitted real shift (phase slope)
    std::uint64_t finite_shift_rank = 0;
    std::vector<double> omega_hat; // real values per finite dual rank
    std::vector<DecomposeStep> certificate;

    const DecomposeStep* step(const std::string& name) const;
};

/// Factorization attempt for a characteristic function on R x F against the
/// model exp(-sigma s^2 + i b s) * (shift character) * omega-hat(h) with
/// omega a measure on the given two-torsion subgroup: fits sigma and b from
/// the trivial-coset slice, extracts omega-hat, and verifies the product
/// form on the full grid plus the measure-on-torsion criteria (real values,
/// constant on cosets of the doubled dual, nonnegative inverse transform).
DecomposeResult decompose(const FourierGaussCharFn& fn, const Subgroup& torsion,
                          const GridSpec& grid, double fit_tol = 1e-6);

/// Finite-group variant: model (shift character) * omega-hat with omega a
/// measure on the torsion subgroup.
DecomposeResult decompose(const FiniteCharFn& fn, const Subgroup& torsion,
                          double fit_tol = 1e-6);

/// Plane variant (R^2, trivial finite part): model f(s) * w(h) with
/// f = exp(-sigma s^2 + i b s) along the first axis and w read off the
/// second axis. Reports the quadratic cross term when the input is a single
/// Gaussian exponential.
DecomposeResult decompose_plane(const FourierGaussCharFn& fn, const GridSpec& grid,
                                double fit_tol = 1e-6);

} // namespace heyde
