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
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "heyde/extended.hpp"
#include "heyde/group.hpp"
#include "heyde/rng.hpp"

namespace heyde {

using Complex = std::complex<double>;

/// Probability distribution on a finite abelian group: a nonnegative vector
/// indexed by element rank, summing to 1 within 1e-12.
class FiniteDist {
  public:
    FiniteDist(FiniteAbelianGroup group, std::vector<double> probs);

    static FiniteDist point_mass(const FiniteAbelianGroup& g, std::span<const Coord> x);
    static FiniteDist uniform(const FiniteAbelianGroup& g);
    static FiniteDist uniform_on(const Subgroup& s);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob_rank(std::uint64_t r) const { return probs_[r]; }

    /// Distribution of the sum of independent draws.
    FiniteDist convolve(const FiniteDist& other) const;
    /// Pushforward under x -> -x.
    FiniteDist reflect() const;
    /// Pushforward under translation by x.
    FiniteDist shift(std::span<const Coord> x) const;
    /// Elements carrying more than `tol` mass.
    std::vector<std::uint64_t> support(double tol = 1e-12) const;

  private:
    FiniteAbelianGroup group_;
    std::vector<double> probs_;
};

/// Characteristic function on a finite dual group: complex values indexed by
/// dual rank. Outputs of dft() satisfy values[0] == 1 and hermitian symmetry;
/// the struct itself is open so tests and counterexamples can build
/// arbitrary tables.
struct FiniteCharFn {
    FiniteAbelianGroup dual;
    std::vector<Complex> values;

    Complex at_rank(std::uint64_t r) const { return values[r]; }
    Complex at(std::span<const Coord> y) const {
        return values[dual.rank_of(dual.reduce(Coords(y.begin(), y.end())))];
    }
    double min_modulus() const;
};

/// Fourier transform by direct summation: values(y) = sum_x p(x) (x, y).
FiniteCharFn dft(const FiniteDist& mu);

/// Inverse transform; complex vector indexed by element rank.
std::vector<Complex> inverse_dft(const FiniteCharFn& chi);

/// Inverse transform interpreted as a distribution; throws ValidationError
/// if the result is not a probability vector within `tol`.
FiniteDist inverse_dft_dist(const FiniteCharFn& chi, double tol = 1e-9);

// ---------------------------------------------------------------------------

/// One closed-form summand c * exp(-<A s, s> + i <b, s>). For real dimension
/// 1 the quadratic form is quad[0] and the linear part lin[0]; for dimension
/// 2, quad packs the symmetric matrix (a00, a01, a11).
struct GaussTerm {
    Complex coeff{1.0, 0.0};
    std::array<double, 3> quad{0.0, 0.0, 0.0};
    std::array<double, 2> lin{0.0, 0.0};
};

/// Characteristic function on R^d x F held in closed form: for each dual
/// element h of F, a list of Gaussian-exponential terms in the real
/// variable. Closed under pointwise product, which is the Fourier side of
/// convolution. Grids appear only at check time, never in the
/// representation.
class FourierGaussCharFn {
  public:
    FourierGaussCharFn(RealExtGroup group, std::vector<std::vector<GaussTerm>> terms,
                       bool validated);

    const RealExtGroup& group() const { return group_; }
    const std::vector<std::vector<GaussTerm>>& terms() const { return terms_; }
    bool validated() const { return validated_; }

    /// Evaluate at real coordinates s (size = real_dim) and finite dual rank.
    Complex eval(std::span<const double> s, std::uint64_t h_rank) const;

    /// Pointwise product; the characteristic function of the convolution.
    FourierGaussCharFn pointwise_product(const FourierGaussCharFn& other) const;

    /// Shift by (t, g): multiplies by the corresponding character.
    FourierGaussCharFn shifted(std::span<const double> t, std::span<const Coord> g) const;

    /// Run the density grid check on every coset; marks the function
    /// validated when all densities are nonnegative within `tol`.
    bool validate_by_grid(int grid_points = 4096, double tol = 1e-12);

  private:
    RealExtGroup group_;
    std::vector<std::vector<GaussTerm>> terms_;
    bool validated_ = false;

    friend struct CharFnBuilder;
};

/// exp(-sigma s^2 + i b s) on R (trivial finite part); sigma >= 0.
FourierGaussCharFn real_gauss(double sigma, double b = 0.0);

/// exp(-<A y, y> + i <b, y>) on R^2; A must be symmetric positive
/// semidefinite (within 1e-12).
FourierGaussCharFn plane_gauss(const std::array<std::array<double, 2>, 2>& a,
                               const std::array<double, 2>& b = {0.0, 0.0});

/// The two-sigma family on R x Z(2): value exp(-sigma s^2) on the trivial
/// character and kappa exp(-sigma_prime s^2) on the nontrivial one. Requires
/// 0 < sigma_prime < sigma and 0 < |kappa| <= sqrt(sigma_prime / sigma);
/// the constructor additionally grid-checks both coset densities for
/// nonnegativity. Scenario files select it as type "remark31".
FourierGaussCharFn gauss_z2_family(double sigma, double sigma_prime, double kappa);

/// Independent product of a real-part characteristic function (trivial
/// finite part, matching dimension) with a finite distribution on F.
FourierGaussCharFn product_with_finite(const FourierGaussCharFn& real_part,
                                       const FiniteDist& finite);

// ---------------------------------------------------------------------------

/// Gaussian characteristic function on a solenoid dual: r -> exp(2 pi i t r)
/// * exp(-sigma r^2), with t parameterizing the dense one-parameter
/// subgroup.
struct SolenoidGaussCharFn {
    double t = 0.0;
    double sigma = 0.0;

    SolenoidGaussCharFn() = default;
    SolenoidGaussCharFn(double t_, double sigma_);
    Complex eval(const Rational& r) const;
    SolenoidGaussCharFn convolve(const SolenoidGaussCharFn& o) const {
        return SolenoidGaussCharFn{t + o.t, sigma + o.sigma};
    }
};

// ---------------------------------------------------------------------------

struct PdCheckResult {
    bool holds = true;
    double max_violation = 0.0; // positive part of |f(u)-f(v)|^2 - 2(1-Re f(u-v))
    std::string witness;        // rendered (u, v) at the worst violation
};

/// The positive-definiteness consequence |f(u)-f(v)|^2 <= 2(1 - Re f(u-v)),
/// over all dual pairs (finite case).
PdCheckResult pd_inequality(const FiniteCharFn& f, double tol = 1e-9);

/// Same over a real grid times the full finite dual.
PdCheckResult pd_inequality(const FourierGaussCharFn& f, std::span<const double> grid,
                            double tol = 1e-9);

/// Same over a list of solenoid dual points.
PdCheckResult pd_inequality(const SolenoidGaussCharFn& f, std::span<const Rational> points,
                            double tol = 1e-9);

// ---------------------------------------------------------------------------

/// Categorical sampler over a finite distribution.
class FiniteSampler {
  public:
    explicit FiniteSampler(const FiniteDist& dist);
    std::uint64_t draw_rank(Rng& rng) const;

  private:
    std::vector<double> cdf_;
};

struct RealExtSample {
    double t = 0.0;
    std::uint64_t g_rank = 0;
};

/// Sampler for a validated characteristic function on R x F whose per-coset
/// densities are finite (possibly signed) Gaussian mixtures. Cosets are
/// drawn by weight; within a coset the positive terms propose and the signed
/// density accepts.
class RealExtSampler {
  public:
    explicit RealExtSampler(const FourierGaussCharFn& fn);

    const RealExtGroup& group() const { return group_; }
    RealExtSample draw(Rng& rng) const;

    /// Per-coset density (for tests and diagnostics).
    double coset_density(std::uint64_t g_rank, double t) const;
    double coset_weight(std::uint64_t g_rank) const;

  private:
    struct MixTerm {
        double weight = 0.0; // signed
        double var2 = 0.0;   // exponent coefficient: density exp(-(t-shift)^2/(4 var2))
        double shift = 0.0;
    };
    struct Coset {
        std::vector<MixTerm> terms;   // continuous part
        std::vector<MixTerm> deltas;  // degenerate part (var2 == 0)
        double weight = 0.0;
        double positive_mass = 0.0;   // total weight of positive continuous terms
    };

    RealExtGroup group_;
    std::vector<Coset> cosets_;
    std::vector<double> coset_cdf_;
};

/// Empirical characteristic function of samples from R x F at (s, h).
Complex empirical_char_fn(std::span<const RealExtSample> samples,
                          const FiniteAbelianGroup& finite_dual, double s,
                          std::span<const Coord> h);

} // namespace heyde
