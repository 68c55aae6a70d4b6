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

#include "heyde/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace heyde {

std::vector<double> GridSpec::points() const {
    if (!(step > 0.0) || !(max >= min)) throw ValidationError("bad grid specification");
    std::vector<double> out;
    const int n = static_cast<int>(std::floor((max - min) / step + 0.5)) + 1;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(min + step * i);
    return out;
}

RealAuto RealAuto::scalar(double a, std::optional<Homomorphism> finite) {
    RealAuto out;
    out.real_dim = 1;
    out.a = a;
    out.finite = std::move(finite);
    return out;
}

RealAuto RealAuto::matrix(const std::array<std::array<double, 2>, 2>& m) {
    RealAuto out;
    out.real_dim = 2;
    out.m = m;
    return out;
}

Cond1Real check_condition1(const RealAuto& alpha, const FiniteAbelianGroup& finite_part) {
    Cond1Real out;
    if (alpha.real_dim == 1) {
        out.real_determinant = 1.0 + alpha.a;
    } else {
        out.real_determinant = (1.0 + alpha.m[0][0]) * (1.0 + alpha.m[1][1]) -
                               alpha.m[0][1] * alpha.m[1][0];
    }
    const bool real_ok = std::abs(out.real_determinant) > 1e-12;
    if (!finite_part.is_trivial()) {
        if (!alpha.finite)
            throw ValidationError("automorphism is missing its finite-part action");
        if (!alpha.finite->is_automorphism())
            throw DomainError("finite-part action is not an automorphism");
        out.finite_kernel_order =
            Homomorphism::identity(finite_part).plus(*alpha.finite).kernel().size();
    }
    out.holds = real_ok && out.finite_kernel_order == 1;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void note_vanishing(const FiniteCharFn& f, Eq2Result& res) {
    if (f.min_modulus() < 1e-12) res.vanishing_warning = true;
}

std::string coords_str(const Coords& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

} // namespace

Eq2Result eq2_exact(const FiniteCharFn& f1, const FiniteCharFn& f2,
                    const Homomorphism& alpha_dual, double tol) {
    const FiniteAbelianGroup& g = f1.dual;
    if (!g.same_moduli(f2.dual)) throw ValidationError("eq2: dual group mismatch");
    if (!alpha_dual.is_endomorphism() || !alpha_dual.source().same_moduli(g))
        throw ValidationError("eq2: automorphism does not act on the dual group");
    g.require_enumerable("eq2 exhaustive check");

    Eq2Result res;
    note_vanishing(f1, res);
    note_vanishing(f2, res);

    const std::uint64_t n = g.order();
    std::vector<Coords> elems(n);
    for (std::uint64_t r = 0; r < n; ++r) elems[r] = g.element(r);
    std::vector<std::uint64_t> atab(n), negtab(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        atab[r] = alpha_dual.apply_rank(r);
        negtab[r] = g.rank_neg(r);
    }
    const auto radd = [&](std::uint64_t a, std::uint64_t b) {
        return g.rank_of(g.add(elems[a], elems[b]));
    };

    std::uint64_t wu = 0, wv = 0;
    for (std::uint64_t u = 0; u < n; ++u) {
        for (std::uint64_t v = 0; v < n; ++v) {
            const Complex lhs = f1.values[radd(u, v)] * f2.values[radd(u, atab[v])];
            const Complex rhs =
                f1.values[radd(u, negtab[v])] * f2.values[radd(u, negtab[atab[v]])];
            const double r = std::abs(lhs - rhs);
            if (r > res.max_residual) {
                res.max_residual = r;
                wu = u;
                wv = v;
            }
        }
    }
    res.holds = res.max_residual < tol;
    if (!res.holds)
        res.witness = "u=" + coords_str(elems[wu]) + " v=" + coords_str(elems[wv]);
    return res;
}

Eq2Result eq2_grid(const FourierGaussCharFn& f1, const FourierGaussCharFn& f2,
                   const RealAuto& alpha, const GridSpec& grid, double tol) {
    if (!f1.group().same_shape(f2.group()))
        throw ValidationError("eq2: characteristic function group mismatch");
    const RealExtGroup& xg = f1.group();
    if (alpha.real_dim != xg.real_dim)
        throw ValidationError("eq2: automorphism real dimension mismatch");
    const FiniteAbelianGroup& fd = xg.finite_part;
    const std::vector<double> pts = grid.points();

    Eq2Result res;
    double w[8] = {0};
    std::uint64_t wh1 = 0, wh2 = 0;

    if (xg.real_dim == 1) {
        std::optional<Homomorphism> adj;
        if (!fd.is_trivial()) {
            if (!alpha.finite)
                throw ValidationError("eq2: automorphism is missing its finite-part action");
            if (!alpha.finite->source().same_moduli(fd))
                throw ValidationError("eq2: finite-part action group mismatch");
            adj = alpha.finite->adjoint();
        }
        const std::uint64_t hn = fd.order();
        std::vector<std::uint64_t> atab(hn), negtab(hn);
        for (std::uint64_t h = 0; h < hn; ++h) {
            atab[h] = adj ? adj->apply_rank(h) : h;
            negtab[h] = fd.rank_neg(h);
        }
        for (double s1 : pts)
            for (std::uint64_t h1 = 0; h1 < hn; ++h1)
                for (double s2 : pts)
                    for (std::uint64_t h2 = 0; h2 < hn; ++h2) {
                        const double up[1] = {s1 + s2};
                        const double ua[1] = {s1 + alpha.a * s2};
                        const double um[1] = {s1 - s2};
                        const double ub[1] = {s1 - alpha.a * s2};
                        const std::uint64_t hp = fd.rank_add(h1, h2);
                        const std::uint64_t ha = fd.rank_add(h1, atab[h2]);
                        const std::uint64_t hm = fd.rank_add(h1, negtab[h2]);
                        const std::uint64_t hb = fd.rank_add(h1, negtab[atab[h2]]);
                        const Complex lhs = f1.eval(up, hp) * f2.eval(ua, ha);
                        const Complex rhs = f1.eval(um, hm) * f2.eval(ub, hb);
                        const double r = std::abs(lhs - rhs);
                        if (r > res.max_residual) {
                            res.max_residual = r;
                            w[0] = s1;
                            w[1] = s2;
                            wh1 = h1;
                            wh2 = h2;
                        }
                    }
        res.holds = res.max_residual < tol;
        if (!res.holds)
            res.witness = "u=(s=" + std::to_string(w[0]) + ",h=rank " + std::to_string(wh1) +
                          ") v=(s=" + std::to_string(w[1]) + ",h=rank " + std::to_string(wh2) +
                          ")";
        return res;
    }

    // Plane case: dual action is the transpose.
    const auto& m = alpha.m;
    for (double u0 : pts)
        for (double u1 : pts)
            for (double v0 : pts)
                for (double v1 : pts) {
                    const double av0 = m[0][0] * v0 + m[1][0] * v1;
                    const double av1 = m[0][1] * v0 + m[1][1] * v1;
                    const double up[2] = {u0 + v0, u1 + v1};
                    const double ua[2] = {u0 + av0, u1 + av1};
                    const double um[2] = {u0 - v0, u1 - v1};
                    const double ub[2] = {u0 - av0, u1 - av1};
                    const Complex lhs = f1.eval(up, 0) * f2.eval(ua, 0);
                    const Complex rhs = f1.eval(um, 0) * f2.eval(ub, 0);
                    const double r = std::abs(lhs - rhs);
                    if (r > res.max_residual) {
                        res.max_residual = r;
                        w[0] = u0;
                        w[1] = u1;
                        w[2] = v0;
                        w[3] = v1;
                    }
                }
    res.holds = res.max_residual < tol;
    if (!res.holds)
        res.witness = "u=(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + ") v=(" +
                      std::to_string(w[2]) + "," + std::to_string(w[3]) + ")";
    return res;
}

Eq2Result eq2_grid_solenoid(const SolenoidGaussCharFn& f1, const SolenoidGaussCharFn& f2,
                            const SolenoidAutomorphism& alpha, std::span<const Rational> points,
                            double tol) {
    Eq2Result res;
    const Rational ratio = alpha.ratio();
    Rational wu, wv;
    for (const Rational& u : points)
        for (const Rational& v : points) {
            const Rational av = v * ratio;
            const Complex lhs = f1.eval(u + v) * f2.eval(u + av);
            const Complex rhs = f1.eval(u - v) * f2.eval(u - av);
            const double r = std::abs(lhs - rhs);
            if (r > res.max_residual) {
                res.max_residual = r;
                wu = u;
                wv = v;
            }
        }
    res.holds = res.max_residual < tol;
    if (!res.holds) res.witness = "u=" + wu.str() + " v=" + wv.str();
    return res;
}

Eq5Result eq5_check(const FiniteCharFn& f1, const FiniteCharFn& f2,
                    const Homomorphism& alpha_dual, double tol) {
    const FiniteAbelianGroup& g = f1.dual;
    if (!g.same_moduli(f2.dual)) throw ValidationError("eq5: dual group mismatch");
    if (!alpha_dual.is_endomorphism() || !alpha_dual.source().same_moduli(g))
        throw ValidationError("eq5: automorphism does not act on the dual group");
    g.require_enumerable("eq5 exhaustive check");

    const Homomorphism id = Homomorphism::identity(g);
    const Homomorphism ia = id.plus(alpha_dual);               // I + A
    const Homomorphism a2 = alpha_dual.plus(alpha_dual);       // 2A
    const Homomorphism two = Homomorphism::scalar(g, 2);

    const std::uint64_t n = g.order();
    std::vector<Coords> elems(n);
    for (std::uint64_t r = 0; r < n; ++r) elems[r] = g.element(r);
    std::vector<std::uint64_t> ia_tab(n), a2_tab(n), two_tab(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        ia_tab[r] = ia.apply_rank(r);
        a2_tab[r] = a2.apply_rank(r);
        two_tab[r] = two.apply_rank(r);
    }
    const auto radd = [&](std::uint64_t a, std::uint64_t b) {
        return g.rank_of(g.add(elems[a], elems[b]));
    };

    Eq5Result res;
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t v = 0; v < n; ++v) {
            const Complex lhs = f1.values[radd(ia_tab[u], two_tab[v])] *
                                f2.values[radd(a2_tab[u], ia_tab[v])];
            const Complex rhs = f1.values[ia_tab[u]] * f2.values[a2_tab[u]] *
                                f1.values[two_tab[v]] * f2.values[ia_tab[v]];
            res.max_residual = std::max(res.max_residual, std::abs(lhs - rhs));
        }
    res.holds = res.max_residual < tol;
    return res;
}

bool conditional_symmetry_exact(const FiniteDist& mu1, const FiniteDist& mu2,
                                const Homomorphism& alpha, double tol) {
    const FiniteAbelianGroup& g = mu1.group();
    if (!g.same_moduli(mu2.group())) throw ValidationError("symmetry oracle: group mismatch");
    if (!alpha.is_endomorphism() || !alpha.source().same_moduli(g))
        throw ValidationError("symmetry oracle: automorphism does not act on the group");
    const std::uint64_t n = g.order();
    if (n > 4096)
        throw CapacityError("joint law enumeration needs order <= 4096, got " +
                            std::to_string(n));

    std::vector<Coords> elems(n);
    for (std::uint64_t r = 0; r < n; ++r) elems[r] = g.element(r);
    std::vector<std::uint64_t> atab(n), negtab(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        atab[r] = alpha.apply_rank(r);
        negtab[r] = g.rank_neg(r);
    }

    std::vector<double> joint(n * n, 0.0);
    for (std::uint64_t x1 = 0; x1 < n; ++x1) {
        const double p1 = mu1.prob_rank(x1);
        if (p1 == 0.0) continue;
        for (std::uint64_t x2 = 0; x2 < n; ++x2) {
            const double p2 = mu2.prob_rank(x2);
            if (p2 == 0.0) continue;
            const std::uint64_t l1 = g.rank_of(g.add(elems[x1], elems[x2]));
            const std::uint64_t l2 = g.rank_of(g.add(elems[x1], elems[atab[x2]]));
            joint[l1 * n + l2] += p1 * p2;
        }
    }
    for (std::uint64_t l1 = 0; l1 < n; ++l1)
        for (std::uint64_t l2 = 0; l2 < n; ++l2)
            if (std::abs(joint[l1 * n + l2] - joint[l1 * n + negtab[l2]]) > tol) return false;
    return true;
}

// ---------------------------------------------------------------------------

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw DomainError("gamma_q needs x >= 0 and a > 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        // Series for P(a, x); Q = 1 - P.
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 10000; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        const double lnp = -x + a * std::log(x) - std::lgamma(a);
        return 1.0 - sum * std::exp(lnp);
    }
    // Continued fraction for Q(a, x) (modified Lentz).
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    const double lnq = -x + a * std::log(x) - std::lgamma(a);
    return std::exp(lnq) * h;
}

namespace {

struct McSamples {
    std::vector<double> l1t, l2t;
    std::vector<std::uint32_t> l1g, l2g;
};

std::vector<double> quantile_edges(std::vector<double> values, int bins) {
    std::sort(values.begin(), values.end());
    std::vector<double> edges;
    for (int i = 1; i < bins; ++i)
        edges.push_back(values[values.size() * static_cast<std::size_t>(i) /
                               static_cast<std::size_t>(bins)]);
    return edges;
}

int bin_index(const std::vector<double>& edges, double x) {
    return static_cast<int>(std::upper_bound(edges.begin(), edges.end(), x) - edges.begin());
}

} // namespace

SymmetryMcResult conditional_symmetry_mc(const RealExtSampler& xi1, const RealExtSampler& xi2,
                                         const RealAuto& alpha, std::size_t n, int bins_per_axis,
                                         std::uint64_t seed, int workers) {
    if (!xi1.group().same_shape(xi2.group()))
        throw ValidationError("symmetry MC: sampler group mismatch");
    if (alpha.real_dim != 1)
        throw ValidationError("symmetry MC supports real dimension 1");
    if (n == 0) throw ValidationError("symmetry MC needs a positive sample count");
    if (bins_per_axis < 1) throw ValidationError("symmetry MC needs at least one bin per axis");
    const FiniteAbelianGroup& f = xi1.group().finite_part;
    std::vector<std::uint64_t> atab(f.order()), negtab(f.order());
    for (std::uint64_t r = 0; r < f.order(); ++r) {
        atab[r] = alpha.finite ? alpha.finite->apply_rank(r) : r;
        negtab[r] = f.rank_neg(r);
    }
    if (!f.is_trivial() && !alpha.finite)
        throw ValidationError("symmetry MC: automorphism is missing its finite-part action");
    if (workers < 1) workers = 1;
    if (static_cast<std::size_t>(workers) > n) workers = 1;

    McSamples all;
    all.l1t.resize(n);
    all.l2t.resize(n);
    all.l1g.resize(n);
    all.l2g.resize(n);

    const auto run_worker = [&](int w, std::size_t begin, std::size_t end) {
        Rng rng = Rng::for_stream(seed, static_cast<std::uint64_t>(w));
        for (std::size_t i = begin; i < end; ++i) {
            const RealExtSample a = xi1.draw(rng);
            const RealExtSample b = xi2.draw(rng);
            all.l1t[i] = a.t + b.t;
            all.l2t[i] = a.t + alpha.a * b.t;
            all.l1g[i] = static_cast<std::uint32_t>(f.rank_add(a.g_rank, b.g_rank));
            all.l2g[i] = static_cast<std::uint32_t>(f.rank_add(a.g_rank, atab[b.g_rank]));
        }
    };
    if (workers == 1) {
        run_worker(0, 0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = n / static_cast<std::size_t>(workers);
        std::size_t begin = 0;
        for (int w = 0; w < workers; ++w) {
            const std::size_t end = (w + 1 == workers) ? n : begin + chunk;
            pool.emplace_back(run_worker, w, begin, end);
            begin = end;
        }
        for (std::thread& t : pool) t.join();
    }

    // Shared quantile bins from the pooled samples of both comparands.
    std::vector<double> axis2(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        axis2[2 * i] = all.l2t[i];
        axis2[2 * i + 1] = -all.l2t[i];
    }
    const std::vector<double> edges1 = quantile_edges(all.l1t, bins_per_axis);
    const std::vector<double> edges2 = quantile_edges(std::move(axis2), bins_per_axis);

    const std::size_t fo = f.order();
    const std::size_t strata = static_cast<std::size_t>(bins_per_axis) * fo *
                               static_cast<std::size_t>(bins_per_axis) * fo;
    std::vector<std::uint64_t> count_a(strata, 0), count_b(strata, 0);
    const auto cell = [&](double t1, std::uint32_t g1, double t2, std::uint32_t g2) {
        const std::size_t b1 = static_cast<std::size_t>(bin_index(edges1, t1));
        const std::size_t b2 = static_cast<std::size_t>(bin_index(edges2, t2));
        return ((b1 * fo + g1) * static_cast<std::size_t>(bins_per_axis) + b2) * fo + g2;
    };
    for (std::size_t i = 0; i < n; ++i) {
        count_a[cell(all.l1t[i], all.l1g[i], all.l2t[i], all.l2g[i])]++;
        count_b[cell(all.l1t[i], all.l1g[i], -all.l2t[i],
                     static_cast<std::uint32_t>(negtab[all.l2g[i]]))]++;
    }

    // Pool cells whose expected count (half the combined count) is below 5.
    SymmetryMcResult res;
    res.samples = n;
    double stat = 0.0;
    std::uint64_t pool_a = 0, pool_b = 0;
    int kept = 0, pooled = 0;
    for (std::size_t i = 0; i < strata; ++i) {
        const std::uint64_t total = count_a[i] + count_b[i];
        if (total == 0) continue;
        if (total < 10) {
            pool_a += count_a[i];
            pool_b += count_b[i];
            ++pooled;
            continue;
        }
        const double diff = static_cast<double>(count_a[i]) - static_cast<double>(count_b[i]);
        stat += diff * diff / static_cast<double>(total);
        ++kept;
    }
    if (pool_a + pool_b > 0) {
        const double diff = static_cast<double>(pool_a) - static_cast<double>(pool_b);
        stat += diff * diff / static_cast<double>(pool_a + pool_b);
        ++kept;
    }
    res.statistic = stat;
    res.cells = kept;
    res.pooled_cells = pooled;
    if (kept < 2) {
        // Both samples collapse into one cell: identical by construction.
        res.df = 0;
        res.p_value = 1.0;
        res.consistent = true;
        return res;
    }
    res.df = kept - 1;
    res.p_value = gamma_q(static_cast<double>(res.df) / 2.0, stat / 2.0);
    res.consistent = res.p_value > 0.01;
    return res;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<Coords>& fuzz_group_shapes() {
    static const std::vector<Coords> shapes = {
        {2},       {3},       {4},       {5},          {6},       {7},
        {8},       {9},       {12},      {16},         {2, 2},    {2, 4},
        {2, 2, 2}, {3, 3},    {2, 3},    {2, 2, 3},    {2, 8},    {4, 4},
        {4, 3},    {2, 5},    {3, 5},    {2, 2, 5},    {8, 3},    {2, 9},
        {2, 3, 3}, {5, 5},    {4, 2, 2}, {2, 2, 2, 2}, {2, 16},   {32},
        {64},      {2, 32},   {6, 6},    {2, 2, 3, 3}, {7, 7},    {2, 7},
    };
    return shapes;
}

FiniteDist near_degenerate_positive(Rng& rng, const FiniteAbelianGroup& g) {
    double eps = 0.05 + 0.4 * rng.uniform01();
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<double> p(g.order());
        double sum = 0.0;
        for (double& v : p) {
            v = -std::log(1.0 - rng.uniform01());
            sum += v;
        }
        for (double& v : p) v = eps * v / sum;
        p[0] += 1.0 - eps;
        FiniteDist dist(g, std::move(p));
        if (dft(dist).min_modulus() > 1e-3) return dist;
        eps *= 0.5;
    }
    return FiniteDist::point_mass(g, g.zero());
}

FiniteDist torsion_supported(Rng& rng, const FiniteAbelianGroup& g) {
    const Subgroup torsion = two_torsion(g);
    std::vector<double> p(g.order(), 0.0);
    double sum = 0.0;
    for (std::uint64_t r : torsion.ranks()) {
        p[r] = 0.05 - std::log(1.0 - rng.uniform01());
        sum += p[r];
    }
    for (std::uint64_t r : torsion.ranks()) p[r] /= sum;
    return FiniteDist(g, std::move(p));
}

FiniteDist constrained_point_mass(Rng& rng, const FiniteAbelianGroup& g,
                                  const Homomorphism& alpha, const FiniteDist& mu2) {
    // x1 = -alpha x2 + tau with tau of order dividing 2 makes the pair pass.
    const std::uint64_t x2 = mu2.support()[0];
    const Subgroup torsion = two_torsion(g);
    const std::uint64_t tau = torsion.ranks()[rng.below(torsion.size())];
    const Coords minus_ax2 = g.neg(alpha.apply(g.element(x2)));
    return FiniteDist::point_mass(g, g.add(minus_ax2, g.element(tau)));
}

} // namespace

Homomorphism random_automorphism(Rng& rng, const FiniteAbelianGroup& g, int tries) {
    const std::size_t d = g.dim();
    for (int t = 0; t < tries; ++t) {
        std::vector<Coords> m(d, Coords(d, 0));
        for (std::size_t i = 0; i < d; ++i) {
            const Coord ni = g.moduli()[i];
            for (std::size_t j = 0; j < d; ++j) {
                const Coord nj = g.moduli()[j];
                const Coord step = ni / std::gcd(ni, nj);
                const Coord count = ni / step;
                m[i][j] = step * static_cast<Coord>(rng.below(static_cast<std::uint64_t>(count)));
            }
        }
        Homomorphism h(g, g, std::move(m));
        if (h.is_automorphism()) return h;
    }
    return Homomorphism::identity(g);
}

FiniteDist random_simplex_dist(Rng& rng, const FiniteAbelianGroup& g) {
    std::vector<double> p(g.order());
    double sum = 0.0;
    for (double& v : p) {
        v = -std::log(1.0 - rng.uniform01());
        sum += v;
    }
    for (double& v : p) v /= sum;
    return FiniteDist(g, std::move(p));
}

FuzzInstance make_fuzz_instance(Rng& rng, std::uint64_t max_order, int force_mode) {
    std::vector<Coords> shapes;
    for (const Coords& s : fuzz_group_shapes()) {
        std::uint64_t order = 1;
        for (Coord n : s) order *= static_cast<std::uint64_t>(n);
        if (order <= max_order) shapes.push_back(s);
    }
    const FiniteAbelianGroup g(shapes[rng.below(shapes.size())]);
    Homomorphism alpha = random_automorphism(rng, g);
    const int mode = force_mode >= 0 ? force_mode : static_cast<int>(rng.below(4));
    switch (mode) {
        case 0:
            return {g, alpha, near_degenerate_positive(rng, g), near_degenerate_positive(rng, g),
                    mode};
        case 1:
            return {g, alpha, random_simplex_dist(rng, g), random_simplex_dist(rng, g), mode};
        case 2:
            return {g, alpha, torsion_supported(rng, g), torsion_supported(rng, g), mode};
        default: {
            FiniteDist mu2 = FiniteDist::point_mass(g, g.element(rng.below(g.order())));
            FiniteDist mu1 = rng.below(2) == 0
                                 ? constrained_point_mass(rng, g, alpha, mu2)
                                 : FiniteDist::point_mass(g, g.element(rng.below(g.order())));
            return {g, alpha, std::move(mu1), std::move(mu2), mode};
        }
    }
}

OracleFuzzOutcome run_oracle_fuzz(int instances, std::uint64_t max_order, std::uint64_t seed,
                                  double tol_exact, double tol_grid) {
    OracleFuzzOutcome out;
    Rng rng(seed);
    for (int i = 0; i < instances; ++i) {
        const FuzzInstance inst = make_fuzz_instance(rng, max_order);
        const Homomorphism adj = inst.alpha.adjoint();
        const FiniteCharFn c1 = dft(inst.mu1);
        const FiniteCharFn c2 = dft(inst.mu2);
        const Eq2Result eq2 = eq2_exact(c1, c2, adj, tol_grid);
        const bool sym = conditional_symmetry_exact(inst.mu1, inst.mu2, inst.alpha, tol_exact);
        ++out.instances;
        if (eq2.holds == sym) {
            ++out.agreements;
        } else {
            ++out.disagreements;
            if (out.first_failure.empty())
                out.first_failure = "instance " + std::to_string(i) + " on " +
                                    inst.group.describe() + ": eq2=" +
                                    (eq2.holds ? "true" : "false") + " oracle=" +
                                    (sym ? "true" : "false");
        }
        if (eq2.holds) {
            ++out.eq2_true;
            const Eq5Result eq5 = eq5_check(c1, c2, adj, tol_grid);
            ++out.eq5_checked;
            out.max_eq5_residual = std::max(out.max_eq5_residual, eq5.max_residual);
            if (!eq5.holds) {
                ++out.eq5_violations;
                if (out.first_failure.empty())
                    out.first_failure = "instance " + std::to_string(i) + " on " +
                                        inst.group.describe() + ": eq2 holds but eq5 fails";
            }
        }
    }
    return out;
}

} // namespace heyde
