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

#include "heyde/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace heyde {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

double term_exponent(const GaussTerm& t, std::span<const double> s) {
    if (s.size() == 1) return t.quad[0] * s[0] * s[0];
    return t.quad[0] * s[0] * s[0] + 2.0 * t.quad[1] * s[0] * s[1] + t.quad[2] * s[1] * s[1];
}

double term_phase(const GaussTerm& t, std::span<const double> s) {
    if (s.size() == 1) return t.lin[0] * s[0];
    return t.lin[0] * s[0] + t.lin[1] * s[1];
}

} // namespace

FiniteDist::FiniteDist(FiniteAbelianGroup group, std::vector<double> probs)
    : group_(std::move(group)), probs_(std::move(probs)) {
    if (probs_.size() != group_.order())
        throw ValidationError("probability vector length " + std::to_string(probs_.size()) +
                              " does not match group order " + std::to_string(group_.order()));
    double sum = 0.0;
    for (double& p : probs_) {
        if (p < -1e-12) throw ValidationError("negative probability entry");
        if (p < 0.0) p = 0.0;
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw ValidationError("probabilities sum to " + std::to_string(sum) + ", not 1");
}

FiniteDist FiniteDist::point_mass(const FiniteAbelianGroup& g, std::span<const Coord> x) {
    g.require_enumerable("point mass");
    std::vector<double> p(g.order(), 0.0);
    p[g.rank_of(g.reduce(Coords(x.begin(), x.end())))] = 1.0;
    return FiniteDist(g, std::move(p));
}

FiniteDist FiniteDist::uniform(const FiniteAbelianGroup& g) {
    g.require_enumerable("uniform distribution");
    return FiniteDist(g, std::vector<double>(g.order(), 1.0 / static_cast<double>(g.order())));
}

FiniteDist FiniteDist::uniform_on(const Subgroup& s) {
    const FiniteAbelianGroup& g = s.parent();
    g.require_enumerable("uniform distribution");
    std::vector<double> p(g.order(), 0.0);
    for (std::uint64_t r : s.ranks()) p[r] = 1.0 / static_cast<double>(s.size());
    return FiniteDist(g, std::move(p));
}

FiniteDist FiniteDist::convolve(const FiniteDist& other) const {
    if (!group_.same_moduli(other.group_))
        throw ValidationError("convolve: group mismatch");
    std::vector<double> out(group_.order(), 0.0);
    for (std::uint64_t a = 0; a < group_.order(); ++a) {
        if (probs_[a] == 0.0) continue;
        for (std::uint64_t b = 0; b < group_.order(); ++b)
            out[group_.rank_add(a, b)] += probs_[a] * other.probs_[b];
    }
    return FiniteDist(group_, std::move(out));
}

FiniteDist FiniteDist::reflect() const {
    std::vector<double> out(group_.order(), 0.0);
    for (std::uint64_t r = 0; r < group_.order(); ++r) out[group_.rank_neg(r)] = probs_[r];
    return FiniteDist(group_, std::move(out));
}

FiniteDist FiniteDist::shift(std::span<const Coord> x) const {
    const std::uint64_t xr = group_.rank_of(group_.reduce(Coords(x.begin(), x.end())));
    std::vector<double> out(group_.order(), 0.0);
    for (std::uint64_t r = 0; r < group_.order(); ++r) out[group_.rank_add(r, xr)] = probs_[r];
    return FiniteDist(group_, std::move(out));
}

std::vector<std::uint64_t> FiniteDist::support(double tol) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < group_.order(); ++r)
        if (probs_[r] > tol) out.push_back(r);
    return out;
}

double FiniteCharFn::min_modulus() const {
    double m = std::numeric_limits<double>::infinity();
    for (const Complex& v : values) m = std::min(m, std::abs(v));
    return m;
}

FiniteCharFn dft(const FiniteDist& mu) {
    const FiniteAbelianGroup& g = mu.group();
    g.require_enumerable("dft");
    FiniteCharFn out{g, std::vector<Complex>(g.order(), Complex{0.0, 0.0})};
    for (std::uint64_t yr = 0; yr < g.order(); ++yr) {
        const Coords y = g.element(yr);
        Complex acc{0.0, 0.0};
        for (std::uint64_t xr = 0; xr < g.order(); ++xr) {
            const double p = mu.prob_rank(xr);
            if (p != 0.0) acc += p * g.pairing(g.element(xr), y);
        }
        out.values[yr] = acc;
    }
    return out;
}

std::vector<Complex> inverse_dft(const FiniteCharFn& chi) {
    const FiniteAbelianGroup& g = chi.dual;
    g.require_enumerable("inverse dft");
    const double inv_n = 1.0 / static_cast<double>(g.order());
    std::vector<Complex> out(g.order(), Complex{0.0, 0.0});
    for (std::uint64_t xr = 0; xr < g.order(); ++xr) {
        const Coords x = g.element(xr);
        Complex acc{0.0, 0.0};
        for (std::uint64_t yr = 0; yr < g.order(); ++yr)
            acc += chi.values[yr] * std::conj(g.pairing(x, g.element(yr)));
        out[xr] = acc * inv_n;
    }
    return out;
}

FiniteDist inverse_dft_dist(const FiniteCharFn& chi, double tol) {
    const std::vector<Complex> raw = inverse_dft(chi);
    std::vector<double> p(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (std::abs(raw[i].imag()) > tol || raw[i].real() < -tol)
            throw ValidationError("inverse transform is not a probability vector");
        p[i] = std::max(0.0, raw[i].real());
    }
    double sum = 0.0;
    for (double v : p) sum += v;
    if (std::abs(sum - 1.0) > tol)
        throw ValidationError("inverse transform mass is " + std::to_string(sum));
    for (double& v : p) v /= sum;
    return FiniteDist(chi.dual, std::move(p));
}

// ---------------------------------------------------------------------------

FourierGaussCharFn::FourierGaussCharFn(RealExtGroup group,
                                       std::vector<std::vector<GaussTerm>> terms, bool validated)
    : group_(std::move(group)), terms_(std::move(terms)), validated_(validated) {
    if (group_.real_dim < 1 || group_.real_dim > 2)
        throw ValidationError("closed-form characteristic functions need real dimension 1 or 2");
    group_.finite_part.require_enumerable("characteristic function table");
    if (terms_.size() != group_.finite_part.order())
        throw ValidationError("term table must have one entry per finite dual element");
    const std::vector<double> zero(static_cast<std::size_t>(group_.real_dim), 0.0);
    const Complex at_zero = eval(zero, 0);
    if (std::abs(at_zero - Complex{1.0, 0.0}) > 1e-9)
        throw ValidationError("characteristic function must equal 1 at the origin");
}

Complex FourierGaussCharFn::eval(std::span<const double> s, std::uint64_t h_rank) const {
    if (s.size() != static_cast<std::size_t>(group_.real_dim))
        throw ValidationError("evaluation point dimension mismatch");
    Complex acc{0.0, 0.0};
    for (const GaussTerm& t : terms_[h_rank]) {
        const double mag = std::exp(-term_exponent(t, s));
        const double ph = term_phase(t, s);
        acc += t.coeff * Complex{mag * std::cos(ph), mag * std::sin(ph)};
    }
    return acc;
}

FourierGaussCharFn FourierGaussCharFn::pointwise_product(const FourierGaussCharFn& other) const {
    if (!group_.same_shape(other.group_))
        throw ValidationError("pointwise product: group mismatch");
    std::vector<std::vector<GaussTerm>> out(terms_.size());
    for (std::size_t h = 0; h < terms_.size(); ++h) {
        for (const GaussTerm& a : terms_[h])
            for (const GaussTerm& b : other.terms_[h]) {
                GaussTerm t;
                t.coeff = a.coeff * b.coeff;
                for (int i = 0; i < 3; ++i) t.quad[i] = a.quad[i] + b.quad[i];
                for (int i = 0; i < 2; ++i) t.lin[i] = a.lin[i] + b.lin[i];
                out[h].push_back(t);
            }
    }
    return FourierGaussCharFn(group_, std::move(out), validated_ && other.validated_);
}

FourierGaussCharFn FourierGaussCharFn::shifted(std::span<const double> t,
                                               std::span<const Coord> g) const {
    if (t.size() != static_cast<std::size_t>(group_.real_dim))
        throw ValidationError("shift dimension mismatch");
    const FiniteAbelianGroup& f = group_.finite_part;
    const Coords gr = f.reduce(Coords(g.begin(), g.end()));
    std::vector<std::vector<GaussTerm>> out(terms_);
    for (std::uint64_t h = 0; h < out.size(); ++h) {
        const Complex chi = f.pairing(gr, f.element(h));
        for (GaussTerm& term : out[h]) {
            term.coeff *= chi;
            for (std::size_t i = 0; i < t.size(); ++i) term.lin[i] += t[i];
        }
    }
    return FourierGaussCharFn(group_, std::move(out), validated_);
}

namespace {

struct MixTermRaw {
    Complex weight{0.0, 0.0};
    double var2 = 0.0;
    double shift = 0.0;
};

// Per-coset inversion of a dimension-1 table: density terms
// weight * exp(-(t-shift)^2 / (4 var2)) / sqrt(4 pi var2), or point masses
// when var2 == 0.
std::vector<std::vector<MixTermRaw>> invert_cosets(const FourierGaussCharFn& fn) {
    const FiniteAbelianGroup& f = fn.group().finite_part;
    const double inv_n = 1.0 / static_cast<double>(f.order());
    std::vector<std::vector<MixTermRaw>> out(f.order());
    for (std::uint64_t g = 0; g < f.order(); ++g) {
        const Coords gx = f.element(g);
        std::map<std::pair<double, double>, Complex> merged;
        for (std::uint64_t h = 0; h < f.order(); ++h) {
            const Complex factor = std::conj(f.pairing(gx, f.element(h))) * inv_n;
            for (const GaussTerm& t : fn.terms()[h])
                merged[{t.quad[0], t.lin[0]}] += factor * t.coeff;
        }
        for (const auto& [key, w] : merged) {
            if (std::abs(w) < 1e-15) continue;
            out[g].push_back(MixTermRaw{w, key.first, key.second});
        }
    }
    return out;
}

double mix_density(const std::vector<MixTermRaw>& terms, double t) {
    double acc = 0.0;
    for (const MixTermRaw& m : terms) {
        if (m.var2 == 0.0) continue;
        const double d = t - m.shift;
        acc += m.weight.real() * std::exp(-d * d / (4.0 * m.var2)) /
               std::sqrt(4.0 * kPi * m.var2);
    }
    return acc;
}

} // namespace

bool FourierGaussCharFn::validate_by_grid(int grid_points, double tol) {
    if (group_.real_dim == 2) {
        // Plane case: single nonnegative-definite term per (trivial) dual
        // element is a genuine Gaussian.
        for (const auto& list : terms_) {
            if (list.size() != 1) return false;
            const GaussTerm& t = list[0];
            const double tr = t.quad[0] + t.quad[2];
            const double det = t.quad[0] * t.quad[2] - t.quad[1] * t.quad[1];
            if (tr < -1e-12 || det < -1e-12) return false;
        }
        validated_ = true;
        return true;
    }
    const auto cosets = invert_cosets(*this);
    double sigma_max = 0.0;
    for (const auto& coset : cosets)
        for (const MixTermRaw& m : coset) {
            if (std::abs(m.weight.imag()) > 1e-9) return false;
            sigma_max = std::max(sigma_max, m.var2);
        }
    for (const auto& coset : cosets) {
        bool has_cont = false;
        for (const MixTermRaw& m : coset) {
            if (m.var2 == 0.0) {
                if (m.weight.real() < -tol) return false;
            } else {
                has_cont = true;
            }
        }
        if (!has_cont || sigma_max == 0.0) continue;
        const double half_width = 10.0 * std::sqrt(sigma_max);
        for (int i = 0; i < grid_points; ++i) {
            const double t =
                -half_width + 2.0 * half_width * static_cast<double>(i) / (grid_points - 1);
            if (mix_density(coset, t) < -tol) return false;
        }
    }
    validated_ = true;
    return true;
}

FourierGaussCharFn real_gauss(double sigma, double b) {
    if (sigma < 0.0) throw DomainError("Gaussian needs sigma >= 0");
    GaussTerm t;
    t.quad[0] = sigma;
    t.lin[0] = b;
    return FourierGaussCharFn(RealExtGroup(1, FiniteAbelianGroup::trivial()), {{t}}, true);
}

FourierGaussCharFn plane_gauss(const std::array<std::array<double, 2>, 2>& a,
                               const std::array<double, 2>& b) {
    if (std::abs(a[0][1] - a[1][0]) > 1e-12)
        throw DomainError("quadratic form matrix must be symmetric");
    const double tr = a[0][0] + a[1][1];
    const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    const double scale = std::max({1.0, std::abs(a[0][0]), std::abs(a[1][1])});
    if (a[0][0] < -1e-12 * scale || a[1][1] < -1e-12 * scale || det < -1e-12 * scale * scale ||
        tr < -1e-12 * scale)
        throw DomainError("quadratic form matrix must be positive semidefinite");
    GaussTerm t;
    t.quad = {a[0][0], a[0][1], a[1][1]};
    t.lin = {b[0], b[1]};
    return FourierGaussCharFn(RealExtGroup(2, FiniteAbelianGroup::trivial()), {{t}}, true);
}

FourierGaussCharFn gauss_z2_family(double sigma, double sigma_prime, double kappa) {
    if (!(sigma_prime > 0.0) || !(sigma_prime < sigma))
        throw DomainError("family needs 0 < sigma_prime < sigma");
    if (kappa == 0.0)
        throw DomainError("family needs kappa != 0: a zero value yields a vanishing "
                          "characteristic function");
    if (std::abs(kappa) > std::sqrt(sigma_prime / sigma) + 1e-15)
        throw DomainError("family needs |kappa| <= sqrt(sigma_prime / sigma)");
    GaussTerm t0;
    t0.quad[0] = sigma;
    GaussTerm t1;
    t1.coeff = Complex{kappa, 0.0};
    t1.quad[0] = sigma_prime;
    FourierGaussCharFn fn(RealExtGroup(1, FiniteAbelianGroup::cyclic(2)), {{t0}, {t1}}, false);
    if (!fn.validate_by_grid())
        throw ValidationError("coset densities are negative beyond tolerance");
    return fn;
}

FourierGaussCharFn product_with_finite(const FourierGaussCharFn& real_part,
                                       const FiniteDist& finite) {
    if (!real_part.group().finite_part.is_trivial())
        throw ValidationError("real factor must have trivial finite part");
    const FiniteCharFn omega_hat = dft(finite);
    const FiniteAbelianGroup& f = finite.group();
    std::vector<std::vector<GaussTerm>> out(f.order());
    for (std::uint64_t h = 0; h < f.order(); ++h) {
        out[h] = real_part.terms()[0];
        for (GaussTerm& t : out[h]) t.coeff *= omega_hat.values[h];
    }
    return FourierGaussCharFn(RealExtGroup(real_part.group().real_dim, f), std::move(out),
                              real_part.validated());
}

// ---------------------------------------------------------------------------

SolenoidGaussCharFn::SolenoidGaussCharFn(double t_, double sigma_) : t(t_), sigma(sigma_) {
    if (sigma < 0.0) throw DomainError("Gaussian needs sigma >= 0");
}

Complex SolenoidGaussCharFn::eval(const Rational& r) const {
    const double x = r.to_double();
    return solenoid_pairing(t, r) * std::exp(-sigma * x * x);
}

// ---------------------------------------------------------------------------

namespace {

void pd_update(PdCheckResult& res, const Complex& fu, const Complex& fv, const Complex& fuv,
               double tol, const std::string& witness) {
    const double lhs = std::norm(fu - fv);
    const double rhs = 2.0 * (1.0 - fuv.real());
    const double violation = lhs - rhs;
    if (violation > res.max_violation) {
        res.max_violation = violation;
        if (violation > tol) res.witness = witness;
    }
    if (violation > tol) res.holds = false;
}

} // namespace

PdCheckResult pd_inequality(const FiniteCharFn& f, double tol) {
    PdCheckResult res;
    const FiniteAbelianGroup& g = f.dual;
    g.require_enumerable("pd inequality");
    for (std::uint64_t u = 0; u < g.order(); ++u)
        for (std::uint64_t v = 0; v < g.order(); ++v) {
            const std::uint64_t uv = g.rank_of(g.sub(g.element(u), g.element(v)));
            pd_update(res, f.values[u], f.values[v], f.values[uv], tol,
                      "u=rank " + std::to_string(u) + ", v=rank " + std::to_string(v));
        }
    return res;
}

PdCheckResult pd_inequality(const FourierGaussCharFn& f, std::span<const double> grid,
                            double tol) {
    PdCheckResult res;
    const FiniteAbelianGroup& fd = f.group().finite_part;
    if (f.group().real_dim != 1)
        throw ValidationError("grid pd check supports real dimension 1");
    for (double su : grid)
        for (std::uint64_t hu = 0; hu < fd.order(); ++hu)
            for (double sv : grid)
                for (std::uint64_t hv = 0; hv < fd.order(); ++hv) {
                    const double s[1] = {su};
                    const double sw[1] = {sv};
                    const double sd[1] = {su - sv};
                    const std::uint64_t hd = fd.rank_of(fd.sub(fd.element(hu), fd.element(hv)));
                    pd_update(res, f.eval(s, hu), f.eval(sw, hv), f.eval(sd, hd), tol,
                              "u=(" + std::to_string(su) + ",h" + std::to_string(hu) + "), v=(" +
                                  std::to_string(sv) + ",h" + std::to_string(hv) + ")");
                }
    return res;
}

PdCheckResult pd_inequality(const SolenoidGaussCharFn& f, std::span<const Rational> points,
                            double tol) {
    PdCheckResult res;
    for (const Rational& u : points)
        for (const Rational& v : points)
            pd_update(res, f.eval(u), f.eval(v), f.eval(u - v), tol,
                      "u=" + u.str() + ", v=" + v.str());
    return res;
}

// ---------------------------------------------------------------------------

FiniteSampler::FiniteSampler(const FiniteDist& dist) {
    cdf_.reserve(dist.probs().size());
    double acc = 0.0;
    for (double p : dist.probs()) {
        acc += p;
        cdf_.push_back(acc);
    }
    if (!cdf_.empty()) cdf_.back() = 1.0;
}

std::uint64_t FiniteSampler::draw_rank(Rng& rng) const {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
        it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
}

RealExtSampler::RealExtSampler(const FourierGaussCharFn& fn) : group_(fn.group()) {
    if (!fn.validated())
        throw DomainError("sampling requires a validated characteristic function");
    if (group_.real_dim != 1)
        throw DomainError("sampling supports real dimension 1");
    const auto raw = invert_cosets(fn);
    double total = 0.0;
    for (const auto& list : raw) {
        Coset c;
        for (const MixTermRaw& m : list) {
            if (std::abs(m.weight.imag()) > 1e-9)
                throw DomainError("coset density has a non-real Gaussian mixture");
            MixTerm term{m.weight.real(), m.var2, m.shift};
            if (m.var2 == 0.0) {
                if (term.weight < -1e-12)
                    throw DomainError("negative point mass in coset density");
                if (term.weight > 0.0) c.deltas.push_back(term);
            } else {
                c.terms.push_back(term);
                if (term.weight > 0.0) c.positive_mass += term.weight;
            }
        }
        if (!c.terms.empty() && !c.deltas.empty())
            throw DomainError("coset density mixes point masses with continuous terms");
        for (const MixTerm& t : c.terms) c.weight += t.weight;
        for (const MixTerm& t : c.deltas) c.weight += t.weight;
        if (c.weight < -1e-9) throw DomainError("negative coset weight");
        c.weight = std::max(0.0, c.weight);
        total += c.weight;
        cosets_.push_back(std::move(c));
    }
    if (std::abs(total - 1.0) > 1e-6)
        throw DomainError("coset weights sum to " + std::to_string(total));
    double acc = 0.0;
    for (const Coset& c : cosets_) {
        acc += c.weight / total;
        coset_cdf_.push_back(acc);
    }
    coset_cdf_.back() = 1.0;
}

double RealExtSampler::coset_density(std::uint64_t g_rank, double t) const {
    double acc = 0.0;
    for (const MixTerm& m : cosets_[g_rank].terms) {
        const double d = t - m.shift;
        acc += m.weight * std::exp(-d * d / (4.0 * m.var2)) / std::sqrt(4.0 * kPi * m.var2);
    }
    return acc;
}

double RealExtSampler::coset_weight(std::uint64_t g_rank) const {
    return cosets_[g_rank].weight;
}

RealExtSample RealExtSampler::draw(Rng& rng) const {
    const double u = rng.uniform01();
    std::uint64_t g = 0;
    while (g + 1 < coset_cdf_.size() && coset_cdf_[g] <= u) ++g;
    const Coset& c = cosets_[g];
    if (!c.deltas.empty()) {
        double pick = rng.uniform01() * c.weight;
        for (const MixTerm& m : c.deltas) {
            pick -= m.weight;
            if (pick <= 0.0) return {m.shift, g};
        }
        return {c.deltas.back().shift, g};
    }
    for (int attempt = 0; attempt < 100000; ++attempt) {
        // Propose from the positive part of the mixture, accept against the
        // signed density.
        double pick = rng.uniform01() * c.positive_mass;
        double var2 = 0.0, shift = 0.0;
        for (const MixTerm& m : c.terms) {
            if (m.weight <= 0.0) continue;
            pick -= m.weight;
            var2 = m.var2;
            shift = m.shift;
            if (pick <= 0.0) break;
        }
        const double t = shift + std::sqrt(2.0 * var2) * rng.normal();
        double envelope = 0.0;
        for (const MixTerm& m : c.terms) {
            if (m.weight <= 0.0) continue;
            const double d = t - m.shift;
            envelope +=
                m.weight * std::exp(-d * d / (4.0 * m.var2)) / std::sqrt(4.0 * kPi * m.var2);
        }
        const double density = coset_density(g, t);
        if (density <= 0.0) continue;
        if (rng.uniform01() * envelope <= density) return {t, g};
    }
    throw DomainError("rejection sampling failed to accept");
}

Complex empirical_char_fn(std::span<const RealExtSample> samples,
                          const FiniteAbelianGroup& finite_dual, double s,
                          std::span<const Coord> h) {
    const Coords hv = finite_dual.reduce(Coords(h.begin(), h.end()));
    Complex acc{0.0, 0.0};
    for (const RealExtSample& x : samples) {
        const Complex chi = finite_dual.pairing(finite_dual.element(x.g_rank), hv);
        acc += chi * Complex{std::cos(s * x.t), std::sin(s * x.t)};
    }
    return acc / static_cast<double>(samples.size());
}

} // namespace heyde
