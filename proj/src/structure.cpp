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

#include "heyde/structure.hpp"

#include <algorithm>
#include <cmath>

namespace heyde {

DualFn DualFn::zero(const FiniteAbelianGroup& g) {
    g.require_enumerable("dual function table");
    return DualFn{g, std::vector<Complex>(g.order(), Complex{0.0, 0.0})};
}

double DualFn::max_abs() const {
    double m = 0.0;
    for (const Complex& v : values) m = std::max(m, std::abs(v));
    return m;
}

DualFn finite_difference(const DualFn& f, std::span<const Coord> h) {
    const FiniteAbelianGroup& g = f.dual;
    const Coords hr = g.reduce(Coords(h.begin(), h.end()));
    DualFn out = DualFn::zero(g);
    for (std::uint64_t y = 0; y < g.order(); ++y) {
        const std::uint64_t shifted = g.rank_of(g.add(g.element(y), hr));
        out.values[y] = f.values[shifted] - f.values[y];
    }
    return out;
}

bool is_polynomial(const DualFn& f, int n, double tol) {
    if (n < 1) throw ValidationError("polynomial degree witness must be >= 1");
    const FiniteAbelianGroup& g = f.dual;
    g.require_enumerable("polynomial test");
    for (std::uint64_t hr = 0; hr < g.order(); ++hr) {
        const Coords h = g.element(hr);
        DualFn cur = f;
        for (int k = 0; k < n; ++k) cur = finite_difference(cur, h);
        if (cur.max_abs() > tol) return false;
    }
    return true;
}

std::pair<DualFn, DualFn> build_pq(const DualFn& psi1, const DualFn& psi2,
                                   const Homomorphism& alpha_dual) {
    const FiniteAbelianGroup& g = psi1.dual;
    if (!g.same_moduli(psi2.dual)) throw ValidationError("build_pq: dual group mismatch");
    if (!alpha_dual.is_endomorphism() || !alpha_dual.source().same_moduli(g))
        throw ValidationError("build_pq: automorphism does not act on the dual group");
    const Homomorphism ia = Homomorphism::identity(g).plus(alpha_dual);
    const Homomorphism a2 = alpha_dual.plus(alpha_dual);
    const Homomorphism two = Homomorphism::scalar(g, 2);
    DualFn p = DualFn::zero(g);
    DualFn q = DualFn::zero(g);
    for (std::uint64_t y = 0; y < g.order(); ++y) {
        p.values[y] = psi1.values[ia.apply_rank(y)] + psi2.values[a2.apply_rank(y)];
        q.values[y] = psi1.values[two.apply_rank(y)] + psi2.values[ia.apply_rank(y)];
    }
    return {std::move(p), std::move(q)};
}

double max_delta3_on_doubled(const DualFn& f) {
    const FiniteAbelianGroup& g = f.dual;
    const Subgroup doubled = Homomorphism::scalar(g, 2).image();
    double worst = 0.0;
    for (std::uint64_t hr : doubled.ranks()) {
        const Coords h = g.element(hr);
        for (std::uint64_t yr : doubled.ranks()) {
            const Coords y = g.element(yr);
            const Complex v = f.values[g.rank_of(g.add(y, g.scale(3, h)))] -
                              3.0 * f.values[g.rank_of(g.add(y, g.scale(2, h)))] +
                              3.0 * f.values[g.rank_of(g.add(y, h))] - f.values[yr];
            worst = std::max(worst, std::abs(v));
        }
    }
    return worst;
}

PqPipelineResult pq_pipeline(const FiniteDist& mu1, const FiniteDist& mu2,
                             const Homomorphism& alpha) {
    PqPipelineResult out;
    const FiniteAbelianGroup& g = mu1.group();
    const FiniteCharFn c1 = dft(mu1);
    const FiniteCharFn c2 = dft(mu2);
    // nu_j = mu_j * reflect(mu_j) has characteristic function |mu_j-hat|^2.
    DualFn psi1 = DualFn::zero(g);
    DualFn psi2 = DualFn::zero(g);
    out.min_modulus = std::min(c1.min_modulus(), c2.min_modulus());
    if (out.min_modulus * out.min_modulus < 1e-9) return out;
    out.applicable = true;
    for (std::uint64_t y = 0; y < g.order(); ++y) {
        psi1.values[y] = Complex{-std::log(std::norm(c1.values[y])), 0.0};
        psi2.values[y] = Complex{-std::log(std::norm(c2.values[y])), 0.0};
    }
    const auto [p, q] = build_pq(psi1, psi2, alpha.adjoint());
    out.max_delta3_p = max_delta3_on_doubled(p);
    out.max_delta3_q = max_delta3_on_doubled(q);
    return out;
}

SupportLocalizeResult support_localize(const FiniteDist& mu, const Subgroup& h, double tol) {
    SupportLocalizeResult out;
    if (!mu.group().same_moduli(h.parent()))
        throw ValidationError("support localization: moduli mismatch");
    const FiniteCharFn c = dft(mu);
    for (std::uint64_t yr : h.ranks())
        out.max_deviation =
            std::max(out.max_deviation, std::abs(c.values[yr] - Complex{1.0, 0.0}));
    out.holds = out.max_deviation <= tol;
    if (out.holds) {
        const Subgroup ann = annihilator(mu.group(), h);
        out.support_verified = true;
        for (std::uint64_t r : mu.support())
            if (!ann.contains_rank(r)) out.support_verified = false;
    }
    return out;
}

bool gaussian_phi_check(const DualFn& phi, double tol) {
    const FiniteAbelianGroup& g = phi.dual;
    g.require_enumerable("quadratic equation check");
    for (const Complex& v : phi.values)
        if (std::abs(v.imag()) > tol || v.real() < -tol)
            throw DomainError("phi must be real and nonnegative");
    for (std::uint64_t u = 0; u < g.order(); ++u) {
        const Coords uc = g.element(u);
        for (std::uint64_t v = 0; v < g.order(); ++v) {
            const Coords vc = g.element(v);
            const Complex lhs = phi.values[g.rank_of(g.add(uc, vc))] +
                                phi.values[g.rank_of(g.sub(uc, vc))];
            const Complex rhs = 2.0 * (phi.values[u] + phi.values[v]);
            if (std::abs(lhs - rhs) > tol) return false;
        }
    }
    return true;
}

bool gaussian_phi_check(const std::function<double(double)>& phi, std::span<const double> grid,
                        double tol) {
    for (double u : grid)
        for (double v : grid)
            if (std::abs(phi(u + v) + phi(u - v) - 2.0 * (phi(u) + phi(v))) > tol) return false;
    return true;
}

// ---------------------------------------------------------------------------

const DecomposeStep* DecomposeResult::step(const std::string& name) const {
    for (const DecomposeStep& s : certificate)
        if (s.name == name) return &s;
    return nullptr;
}

namespace {

struct SliceFit {
    double sigma = 0.0;
    double b = 0.0;
    double residual = 0.0;
};

// Least-squares fit of log|f| against -sigma s^2 and of the unwrapped phase
// against b*s, over the grid points where |f| stays above 1e-12.
SliceFit fit_gauss_slice(const std::vector<double>& pts, const std::vector<Complex>& values) {
    SliceFit fit;
    double s2m = 0.0, s4 = 0.0, s1th = 0.0, s2b = 0.0;
    std::vector<double> theta(pts.size(), 0.0);
    // Unwrap the phase along the grid.
    double prev = 0.0;
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double th = std::arg(values[i]);
        if (i > 0) {
            while (th - prev > 3.141592653589793) th -= kTwoPi;
            while (th - prev < -3.141592653589793) th += kTwoPi;
        }
        theta[i] = th;
        prev = th;
    }
    // Anchor so the point nearest the origin has phase nearest zero.
    std::size_t i0 = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (std::abs(pts[i]) < std::abs(pts[i0])) i0 = i;
    const double anchor = kTwoPi * std::round(theta[i0] / kTwoPi);
    for (double& th : theta) th -= anchor;

    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double mod = std::abs(values[i]);
        if (mod <= 1e-12) continue;
        const double s = pts[i];
        const double m = std::log(mod);
        s2m += m * s * s;
        s4 += s * s * s * s;
        s1th += theta[i] * s;
        s2b += s * s;
    }
    fit.sigma = s4 > 0.0 ? -s2m / s4 : 0.0;
    fit.b = s2b > 0.0 ? s1th / s2b : 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double mod = std::abs(values[i]);
        if (mod <= 1e-12) continue;
        const double s = pts[i];
        fit.residual = std::max(fit.residual, std::abs(std::log(mod) + fit.sigma * s * s));
        fit.residual = std::max(fit.residual, std::abs(theta[i] - fit.b * s));
    }
    return fit;
}

struct OmegaCandidate {
    std::uint64_t shift_rank = 0;
    std::vector<double> omega_hat;
    double imag_residual = 0.0;
    double coset_residual = 0.0;
    double measure_residual = 0.0;
    int steps_passed = 0;
};

// Try every finite shift candidate; the winner maximizes the number of
// passing sub-checks (realness, constancy on cosets of 2H, nonnegative
// inverse transform supported on the torsion subgroup).
OmegaCandidate extract_omega(const FiniteAbelianGroup& f, const std::vector<Complex>& w_raw,
                             const Subgroup& torsion, double fit_tol) {
    const Subgroup doubled = Homomorphism::scalar(f, 2).image();
    OmegaCandidate best;
    bool have_best = false;
    for (std::uint64_t g0 = 0; g0 < f.order(); ++g0) {
        OmegaCandidate cand;
        cand.shift_rank = g0;
        const Coords gx = f.element(g0);
        std::vector<Complex> vals(f.order());
        for (std::uint64_t h = 0; h < f.order(); ++h) {
            vals[h] = std::conj(f.pairing(gx, f.element(h))) * w_raw[h];
            cand.imag_residual = std::max(cand.imag_residual, std::abs(vals[h].imag()));
        }
        // Constancy on cosets of the doubled dual.
        for (std::uint64_t h = 0; h < f.order(); ++h)
            for (std::uint64_t k : doubled.ranks())
                cand.coset_residual = std::max(
                    cand.coset_residual, std::abs(vals[f.rank_add(h, k)] - vals[h]));
        cand.omega_hat.resize(f.order());
        for (std::uint64_t h = 0; h < f.order(); ++h) cand.omega_hat[h] = vals[h].real();
        // Inverse transform: nonnegative mass confined to the torsion subgroup.
        const FiniteCharFn chi{f, vals};
        const std::vector<Complex> omega = inverse_dft(chi);
        for (std::uint64_t r = 0; r < f.order(); ++r) {
            double dev = std::abs(omega[r].imag());
            dev = std::max(dev, std::max(0.0, -omega[r].real()));
            if (!torsion.contains_rank(r)) dev = std::max(dev, std::abs(omega[r].real()));
            cand.measure_residual = std::max(cand.measure_residual, dev);
        }
        cand.steps_passed = (cand.imag_residual <= fit_tol ? 1 : 0) +
                            (cand.coset_residual <= fit_tol ? 1 : 0) +
                            (cand.measure_residual <= fit_tol ? 1 : 0);
        const double total =
            cand.imag_residual + cand.coset_residual + cand.measure_residual;
        const double best_total =
            best.imag_residual + best.coset_residual + best.measure_residual;
        if (!have_best || cand.steps_passed > best.steps_passed ||
            (cand.steps_passed == best.steps_passed && total < best_total)) {
            best = std::move(cand);
            have_best = true;
        }
        if (best.steps_passed == 3 && best.shift_rank == g0) {
            // Prefer the earliest fully passing shift.
            break;
        }
    }
    return best;
}

void push_step(DecomposeResult& res, const std::string& name, double residual, double tol,
               const std::string& note = "") {
    res.certificate.push_back(DecomposeStep{name, residual, residual <= tol, note});
}

} // namespace

DecomposeResult decompose(const FourierGaussCharFn& fn, const Subgroup& torsion,
                          const GridSpec& grid, double fit_tol) {
    if (fn.group().real_dim != 1)
        throw ValidationError("decompose on R x F needs real dimension 1");
    const FiniteAbelianGroup& f = fn.group().finite_part;
    if (!torsion.parent().same_moduli(f))
        throw ValidationError("decompose: torsion subgroup lives on the wrong group");
    DecomposeResult res;
    const std::vector<double> pts = grid.points();

    std::vector<Complex> slice(pts.size());
    std::size_t usable = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double s[1] = {pts[i]};
        slice[i] = fn.eval(s, 0);
        if (std::abs(slice[i]) > 1e-12) ++usable;
    }
    if (usable < 5)
        throw DomainError("characteristic function vanishes on the fitting slice");
    const SliceFit fit = fit_gauss_slice(pts, slice);
    res.sigma = fit.sigma;
    res.b = fit.b;
    push_step(res, "slice_gaussian", fit.residual, fit_tol,
              "log-modulus and phase of the h=0 slice against a Gaussian exponential");

    std::vector<Complex> w_raw(f.order());
    for (std::uint64_t h = 0; h < f.order(); ++h) {
        const double zero[1] = {0.0};
        w_raw[h] = fn.eval(zero, h);
    }
    OmegaCandidate omega = extract_omega(f, w_raw, torsion, fit_tol);
    res.finite_shift_rank = omega.shift_rank;
    res.omega_hat = omega.omega_hat;
    push_step(res, "omega_real", omega.imag_residual, fit_tol);
    push_step(res, "omega_coset_constant", omega.coset_residual, fit_tol,
              "values constant on cosets of the doubled dual");
    push_step(res, "omega_measure", omega.measure_residual, fit_tol,
              "inverse transform nonnegative and supported on the torsion subgroup");

    // Full-grid verification of the product form.
    double product_residual = 0.0;
    const Coords gx = f.element(omega.shift_rank);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double s = pts[i];
        const Complex gauss =
            std::exp(-res.sigma * s * s) * Complex{std::cos(res.b * s), std::sin(res.b * s)};
        for (std::uint64_t h = 0; h < f.order(); ++h) {
            const double sv[1] = {s};
            const Complex model = gauss * f.pairing(gx, f.element(h)) * omega.omega_hat[h];
            product_residual = std::max(product_residual, std::abs(fn.eval(sv, h) - model));
        }
    }
    push_step(res, "product_form", product_residual, fit_tol,
              "closed form against exp(-sigma s^2 + i b s) * shift * omega-hat on the grid");

    res.success = std::all_of(res.certificate.begin(), res.certificate.end(),
                              [](const DecomposeStep& s) { return s.passed; });
    return res;
}

DecomposeResult decompose(const FiniteCharFn& fn, const Subgroup& torsion, double fit_tol) {
    const FiniteAbelianGroup& f = fn.dual;
    if (!torsion.parent().same_moduli(f))
        throw ValidationError("decompose: torsion subgroup lives on the wrong group");
    f.require_enumerable("decompose");
    DecomposeResult res;
    OmegaCandidate omega = extract_omega(f, fn.values, torsion, fit_tol);
    res.finite_shift_rank = omega.shift_rank;
    res.omega_hat = omega.omega_hat;
    push_step(res, "omega_real", omega.imag_residual, fit_tol);
    push_step(res, "omega_coset_constant", omega.coset_residual, fit_tol,
              "values constant on cosets of the doubled dual");
    push_step(res, "omega_measure", omega.measure_residual, fit_tol,
              "inverse transform nonnegative and supported on the torsion subgroup");
    res.success = std::all_of(res.certificate.begin(), res.certificate.end(),
                              [](const DecomposeStep& s) { return s.passed; });
    return res;
}

DecomposeResult decompose_plane(const FourierGaussCharFn& fn, const GridSpec& grid,
                                double fit_tol) {
    if (fn.group().real_dim != 2 || !fn.group().finite_part.is_trivial())
        throw ValidationError("plane decompose needs R^2 with trivial finite part");
    DecomposeResult res;
    const std::vector<double> pts = grid.points();

    std::vector<Complex> slice(pts.size());
    std::size_t usable = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double s[2] = {pts[i], 0.0};
        slice[i] = fn.eval(s, 0);
        if (std::abs(slice[i]) > 1e-12) ++usable;
    }
    if (usable < 5)
        throw DomainError("characteristic function vanishes on the fitting slice");
    const SliceFit fit = fit_gauss_slice(pts, slice);
    res.sigma = fit.sigma;
    res.b = fit.b;
    push_step(res, "slice_gaussian", fit.residual, fit_tol,
              "first-axis slice against a Gaussian exponential");

    double product_residual = 0.0;
    for (double s : pts) {
        const Complex gauss =
            std::exp(-res.sigma * s * s) * Complex{std::cos(res.b * s), std::sin(res.b * s)};
        for (double h : pts) {
            const double sh[2] = {s, h};
            const double zh[2] = {0.0, h};
            const Complex model = gauss * fn.eval(zh, 0);
            product_residual = std::max(product_residual, std::abs(fn.eval(sh, 0) - model));
        }
    }
    std::string note = "separability of the two axes";
    double cross = 0.0;
    if (fn.terms()[0].size() == 1) {
        cross = fn.terms()[0][0].quad[1];
        note += "; quadratic cross term " + std::to_string(cross);
    }
    push_step(res, "product_form", product_residual, fit_tol, note);
    res.success = std::all_of(res.certificate.begin(), res.certificate.end(),
                              [](const DecomposeStep& s) { return s.passed; });
    return res;
}

} // namespace heyde
