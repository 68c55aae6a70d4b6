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

#include "heyde/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "heyde/rng.hpp"

namespace heyde {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Coord positive_mod(Coord a, Coord n) {
    Coord r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

FiniteAbelianGroup::FiniteAbelianGroup(Coords moduli, std::uint64_t enumeration_bound)
    : moduli_(std::move(moduli)), bound_(enumeration_bound) {
    for (Coord n : moduli_) {
        if (n < 2) throw ValidationError("group modulus must be >= 2, got " + std::to_string(n));
        if (order_ > bound_ / static_cast<std::uint64_t>(n))
            throw CapacityError("group order exceeds enumeration bound " + std::to_string(bound_));
        order_ *= static_cast<std::uint64_t>(n);
        lcm_ = std::lcm(lcm_, n);
    }
}

std::string FiniteAbelianGroup::describe() const {
    if (moduli_.empty()) return "Z(1)";
    std::string s;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i) s += "x";
        s += "Z(" + std::to_string(moduli_[i]) + ")";
    }
    return s;
}

void FiniteAbelianGroup::require_enumerable(const char* what) const {
    if (order_ > bound_)
        throw CapacityError(std::string(what) + ": order " + std::to_string(order_) +
                            " exceeds enumeration bound " + std::to_string(bound_));
}

Coords FiniteAbelianGroup::reduce(Coords x) const {
    check_coords(x, "reduce");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = positive_mod(x[i], moduli_[i]);
    return x;
}

void FiniteAbelianGroup::check_coords(std::span<const Coord> a, const char* what) const {
    if (a.size() != moduli_.size())
        throw ValidationError(std::string(what) + ": coordinate count " +
                              std::to_string(a.size()) + " does not match group " + describe());
}

Coords FiniteAbelianGroup::add(std::span<const Coord> a, std::span<const Coord> b) const {
    check_coords(a, "add");
    check_coords(b, "add");
    Coords out(moduli_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = positive_mod(a[i] + b[i], moduli_[i]);
    return out;
}

Coords FiniteAbelianGroup::sub(std::span<const Coord> a, std::span<const Coord> b) const {
    check_coords(a, "sub");
    check_coords(b, "sub");
    Coords out(moduli_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = positive_mod(a[i] - b[i], moduli_[i]);
    return out;
}

Coords FiniteAbelianGroup::neg(std::span<const Coord> a) const {
    check_coords(a, "neg");
    Coords out(moduli_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = positive_mod(-a[i], moduli_[i]);
    return out;
}

Coords FiniteAbelianGroup::scale(Coord k, std::span<const Coord> a) const {
    check_coords(a, "scale");
    Coords out(moduli_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Coord kr = positive_mod(k, moduli_[i]);
        out[i] = positive_mod(kr * positive_mod(a[i], moduli_[i]), moduli_[i]);
    }
    return out;
}

bool FiniteAbelianGroup::is_zero(std::span<const Coord> a) const {
    check_coords(a, "is_zero");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (positive_mod(a[i], moduli_[i]) != 0) return false;
    return true;
}

std::uint64_t FiniteAbelianGroup::rank_of(std::span<const Coord> a) const {
    check_coords(a, "rank_of");
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r = r * static_cast<std::uint64_t>(moduli_[i]) +
            static_cast<std::uint64_t>(positive_mod(a[i], moduli_[i]));
    return r;
}

Coords FiniteAbelianGroup::element(std::uint64_t rank) const {
    Coords out(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        out[i] = static_cast<Coord>(rank % static_cast<std::uint64_t>(moduli_[i]));
        rank /= static_cast<std::uint64_t>(moduli_[i]);
    }
    return out;
}

std::uint64_t FiniteAbelianGroup::rank_add(std::uint64_t a, std::uint64_t b) const {
    return rank_of(add(element(a), element(b)));
}

std::uint64_t FiniteAbelianGroup::rank_neg(std::uint64_t a) const {
    return rank_of(neg(element(a)));
}

Coord FiniteAbelianGroup::pairing_phase_numerator(std::span<const Coord> x,
                                                  std::span<const Coord> y) const {
    check_coords(x, "pairing");
    check_coords(y, "pairing");
    // Accumulate sum_i x_i y_i * (L / n_i) mod L with L = lcm(n_i); exact.
    Coord acc = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const Coord n = moduli_[i];
        const Coord xi = positive_mod(x[i], n);
        const Coord yi = positive_mod(y[i], n);
        const Coord term = positive_mod(xi * yi, n) * (lcm_ / n);
        acc = positive_mod(acc + term, lcm_);
    }
    return acc;
}

std::complex<double> FiniteAbelianGroup::pairing(std::span<const Coord> x,
                                                 std::span<const Coord> y) const {
    const Coord num = pairing_phase_numerator(x, y);
    if (num == 0) return {1.0, 0.0};
    const double phase = kTwoPi * static_cast<double>(num) / static_cast<double>(lcm_);
    return {std::cos(phase), std::sin(phase)};
}

bool FiniteAbelianGroup::pairing_is_one(std::span<const Coord> x,
                                        std::span<const Coord> y) const {
    return pairing_phase_numerator(x, y) == 0;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteAbelianGroup parent, std::vector<std::uint64_t> sorted_ranks)
    : parent_(std::move(parent)), ranks_(std::move(sorted_ranks)) {
    if (!std::is_sorted(ranks_.begin(), ranks_.end()))
        std::sort(ranks_.begin(), ranks_.end());
    ranks_.erase(std::unique(ranks_.begin(), ranks_.end()), ranks_.end());
    if (ranks_.empty() || ranks_.front() != 0)
        throw ValidationError("subgroup must contain the zero element");
    for (std::uint64_t r : ranks_)
        if (r >= parent_.order()) throw ValidationError("subgroup rank out of range");
    for (std::uint64_t r : ranks_)
        if (!contains_rank(parent_.rank_neg(r)))
            throw ValidationError("subgroup not closed under negation");
    // Closure under addition; full check only at desk scale.
    const std::uint64_t n = ranks_.size();
    if (n * n <= 4000000) {
        for (std::uint64_t a : ranks_)
            for (std::uint64_t b : ranks_)
                if (!contains_rank(parent_.rank_add(a, b)))
                    throw ValidationError("subgroup not closed under addition");
    } else {
        std::uint64_t probe = 0x6d5f4b3a2c1e0f9dull;
        for (int i = 0; i < 4096; ++i) {
            const std::uint64_t a = ranks_[splitmix64(probe) % n];
            const std::uint64_t b = ranks_[splitmix64(probe) % n];
            if (!contains_rank(parent_.rank_add(a, b)))
                throw ValidationError("subgroup not closed under addition");
        }
    }
}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& g) {
    return Subgroup(g, {0});
}

Subgroup Subgroup::whole(const FiniteAbelianGroup& g) {
    g.require_enumerable("subgroup enumeration");
    std::vector<std::uint64_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

Subgroup Subgroup::generated(const FiniteAbelianGroup& g,
                             const std::vector<Coords>& generators) {
    g.require_enumerable("subgroup generation");
    std::vector<bool> in(g.order(), false);
    std::vector<std::uint64_t> frontier{0};
    in[0] = true;
    std::vector<std::uint64_t> gens;
    gens.reserve(generators.size());
    for (const Coords& x : generators) gens.push_back(g.rank_of(g.reduce(x)));
    while (!frontier.empty()) {
        const std::uint64_t cur = frontier.back();
        frontier.pop_back();
        for (std::uint64_t gen : gens) {
            const std::uint64_t nxt = g.rank_add(cur, gen);
            if (!in[nxt]) {
                in[nxt] = true;
                frontier.push_back(nxt);
            }
        }
    }
    std::vector<std::uint64_t> ranks;
    for (std::uint64_t r = 0; r < g.order(); ++r)
        if (in[r]) ranks.push_back(r);
    return Subgroup(g, std::move(ranks));
}

bool Subgroup::contains_rank(std::uint64_t r) const {
    return std::binary_search(ranks_.begin(), ranks_.end(), r);
}

bool Subgroup::contains(std::span<const Coord> x) const {
    return contains_rank(parent_.rank_of(parent_.reduce(Coords(x.begin(), x.end()))));
}

std::vector<Coords> Subgroup::elements() const {
    std::vector<Coords> out;
    out.reserve(ranks_.size());
    for (std::uint64_t r : ranks_) out.push_back(parent_.element(r));
    return out;
}

// ---------------------------------------------------------------------------

Homomorphism::Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                           std::vector<Coords> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.size() != target_.dim())
        throw ValidationError("homomorphism matrix must have one row per target factor");
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        if (matrix_[i].size() != source_.dim())
            throw ValidationError("homomorphism matrix must have one column per source factor");
        const Coord ni = target_.moduli()[i];
        for (std::size_t j = 0; j < matrix_[i].size(); ++j) {
            const Coord nj = source_.moduli()[j];
            // Well-definedness: n_j * (M e_j) must vanish in the target.
            if ((positive_mod(matrix_[i][j], ni) * nj) % ni != 0)
                throw ValidationError("matrix entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is incompatible with moduli " +
                                      std::to_string(ni) + "," + std::to_string(nj));
            matrix_[i][j] = positive_mod(matrix_[i][j], ni);
        }
    }
}

Homomorphism Homomorphism::identity(const FiniteAbelianGroup& g) {
    std::vector<Coords> m(g.dim(), Coords(g.dim(), 0));
    for (std::size_t i = 0; i < g.dim(); ++i) m[i][i] = 1;
    return Homomorphism(g, g, std::move(m));
}

Homomorphism Homomorphism::scalar(const FiniteAbelianGroup& g, Coord n) {
    std::vector<Coords> m(g.dim(), Coords(g.dim(), 0));
    for (std::size_t i = 0; i < g.dim(); ++i) m[i][i] = positive_mod(n, g.moduli()[i]);
    return Homomorphism(g, g, std::move(m));
}

Coords Homomorphism::apply(std::span<const Coord> x) const {
    source_.check_coords(x, "homomorphism apply");
    Coords out(target_.dim(), 0);
    for (std::size_t i = 0; i < target_.dim(); ++i) {
        const Coord ni = target_.moduli()[i];
        Coord acc = 0;
        for (std::size_t j = 0; j < source_.dim(); ++j)
            acc = positive_mod(acc + matrix_[i][j] * positive_mod(x[j], source_.moduli()[j]), ni);
        out[i] = acc;
    }
    return out;
}

std::uint64_t Homomorphism::apply_rank(std::uint64_t r) const {
    return target_.rank_of(apply(source_.element(r)));
}

Homomorphism Homomorphism::compose(const Homomorphism& inner) const {
    if (!inner.target_.same_moduli(source_))
        throw ValidationError("compose: inner target does not match outer source");
    std::vector<Coords> m(target_.dim(), Coords(inner.source_.dim(), 0));
    for (std::size_t i = 0; i < target_.dim(); ++i) {
        const Coord ni = target_.moduli()[i];
        for (std::size_t j = 0; j < inner.source_.dim(); ++j) {
            Coord acc = 0;
            for (std::size_t k = 0; k < source_.dim(); ++k)
                acc = positive_mod(acc + matrix_[i][k] * inner.matrix_[k][j], ni);
            m[i][j] = acc;
        }
    }
    return Homomorphism(inner.source_, target_, std::move(m));
}

Homomorphism Homomorphism::plus(const Homomorphism& other) const {
    if (!source_.same_moduli(other.source_) || !target_.same_moduli(other.target_))
        throw ValidationError("plus: mismatched source or target");
    std::vector<Coords> m(matrix_);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            m[i][j] = positive_mod(m[i][j] + other.matrix_[i][j], target_.moduli()[i]);
    return Homomorphism(source_, target_, std::move(m));
}

Homomorphism Homomorphism::adjoint() const {
    // (x, g y)_source = (f x, y)_target forces
    //   g[j][i] = source_n_j * M[i][j] / target_n_i  (an integer by
    // well-definedness), reduced mod source_n_j.
    std::vector<Coords> m(source_.dim(), Coords(target_.dim(), 0));
    for (std::size_t j = 0; j < source_.dim(); ++j) {
        const Coord nj = source_.moduli()[j];
        for (std::size_t i = 0; i < target_.dim(); ++i) {
            const Coord ni = target_.moduli()[i];
            m[j][i] = positive_mod((nj * matrix_[i][j]) / ni, nj);
        }
    }
    Homomorphism adj(target_, source_, std::move(m));
#ifndef NDEBUG
    if (source_.order() <= 4096 && target_.order() <= 4096) {
        for (std::uint64_t xr = 0; xr < source_.order(); ++xr)
            for (std::uint64_t yr = 0; yr < target_.order(); ++yr) {
                const Coords x = source_.element(xr);
                const Coords y = target_.element(yr);
                if (target_.pairing_phase_numerator(apply(x), y) *
                        source_.phase_denominator() !=
                    source_.pairing_phase_numerator(x, adj.apply(y)) *
                        target_.phase_denominator())
                    throw ValidationError("adjoint identity failed");
            }
    }
#endif
    return adj;
}

bool Homomorphism::is_automorphism() const {
    if (!is_endomorphism()) return false;
    source_.require_enumerable("automorphism check");
    std::vector<bool> seen(source_.order(), false);
    for (std::uint64_t r = 0; r < source_.order(); ++r) {
        const std::uint64_t img = apply_rank(r);
        if (seen[img]) return false;
        seen[img] = true;
    }
    return true;
}

Subgroup Homomorphism::kernel() const {
    source_.require_enumerable("kernel");
    std::vector<std::uint64_t> ranks;
    for (std::uint64_t r = 0; r < source_.order(); ++r)
        if (apply_rank(r) == 0) ranks.push_back(r);
    return Subgroup(source_, std::move(ranks));
}

Subgroup Homomorphism::image() const {
    source_.require_enumerable("image");
    target_.require_enumerable("image");
    std::vector<bool> seen(target_.order(), false);
    for (std::uint64_t r = 0; r < source_.order(); ++r) seen[apply_rank(r)] = true;
    std::vector<std::uint64_t> ranks;
    for (std::uint64_t r = 0; r < target_.order(); ++r)
        if (seen[r]) ranks.push_back(r);
    return Subgroup(target_, std::move(ranks));
}

// ---------------------------------------------------------------------------

bool check_condition1(const Homomorphism& alpha) {
    if (!alpha.is_endomorphism() || !alpha.is_automorphism())
        throw DomainError("condition-1 check requires an automorphism");
    return Homomorphism::identity(alpha.source()).plus(alpha).kernel().is_trivial();
}

Subgroup annihilator(const FiniteAbelianGroup& dual, const Subgroup& s) {
    if (!dual.same_moduli(s.parent()))
        throw ValidationError("annihilator: dual moduli do not match subgroup parent");
    dual.require_enumerable("annihilator");
    std::vector<std::uint64_t> ranks;
    for (std::uint64_t yr = 0; yr < dual.order(); ++yr) {
        const Coords y = dual.element(yr);
        bool all_one = true;
        for (std::uint64_t xr : s.ranks()) {
            if (!dual.pairing_is_one(s.parent().element(xr), y)) {
                all_one = false;
                break;
            }
        }
        if (all_one) ranks.push_back(yr);
    }
    return Subgroup(dual, std::move(ranks));
}

Subgroup two_torsion(const FiniteAbelianGroup& g) {
    return Homomorphism::scalar(g, 2).kernel();
}

} // namespace heyde
