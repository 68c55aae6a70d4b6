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
#include <complex>
#include <numeric>

#include "heyde/checks.hpp"
#include "heyde/group.hpp"
#include "heyde/rng.hpp"

using namespace heyde;

namespace {

Subgroup random_subgroup(Rng& rng, const FiniteAbelianGroup& g) {
    std::vector<Coords> gens;
    const int count = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < count; ++i) gens.push_back(g.element(rng.below(g.order())));
    return Subgroup::generated(g, gens);
}

} // namespace

TEST_CASE("pairing on cyclic and product groups") {
    const FiniteAbelianGroup z4 = FiniteAbelianGroup::cyclic(4);
    const auto i = z4.pairing(Coords{1}, Coords{1});
    CHECK(std::abs(i - std::complex<double>{0.0, 1.0}) < 1e-12);

    // Zero element pairs to 1 with everything.
    for (std::uint64_t y = 0; y < z4.order(); ++y)
        CHECK(z4.pairing_is_one(z4.zero(), z4.element(y)));

    // Oracle: direct evaluation of exp(2*pi*i*(x1 y1/2 + x2 y2/3)).
    const FiniteAbelianGroup z2z3({2, 3});
    const auto got = z2z3.pairing(Coords{1, 1}, Coords{1, 2});
    const double phase = 2.0 * 3.14159265358979323846 * (1.0 / 2.0 + 2.0 / 3.0);
    const std::complex<double> want{std::cos(phase), std::sin(phase)};
    CHECK(std::abs(got - want) < 1e-12);
    CHECK(std::abs(got - std::complex<double>{0.5, std::sqrt(3.0) / 2.0}) < 1e-12);
}

TEST_CASE("pairing is bi-additive") {
    Rng rng(11);
    const FiniteAbelianGroup g({4, 3, 2});
    for (int trial = 0; trial < 200; ++trial) {
        const Coords x = g.element(rng.below(g.order()));
        const Coords xp = g.element(rng.below(g.order()));
        const Coords y = g.element(rng.below(g.order()));
        const auto lhs = g.pairing(g.add(x, xp), y);
        const auto rhs = g.pairing(x, y) * g.pairing(xp, y);
        CHECK(std::abs(lhs - rhs) < 1e-12);
        CHECK(std::abs(std::abs(g.pairing(x, y)) - 1.0) < 1e-12);
    }
}

TEST_CASE("pairing rejects mismatched moduli") {
    const FiniteAbelianGroup a({4});
    CHECK_THROWS_AS(a.pairing(Coords{1}, Coords{1, 0}), ValidationError);
}

TEST_CASE("automorphism detection") {
    const FiniteAbelianGroup z5 = FiniteAbelianGroup::cyclic(5);
    CHECK(Homomorphism(z5, z5, {{2}}).is_automorphism());

    const FiniteAbelianGroup z2sq({2, 2});
    CHECK(Homomorphism(z2sq, z2sq, {{0, 1}, {1, 1}}).is_automorphism());

    const FiniteAbelianGroup z4 = FiniteAbelianGroup::cyclic(4);
    CHECK_FALSE(Homomorphism(z4, z4, {{2}}).is_automorphism());
}

TEST_CASE("homomorphism compatibility validation") {
    const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    const FiniteAbelianGroup z4 = FiniteAbelianGroup::cyclic(4);
    // Z(2) -> Z(4) must land in the order-2 subgroup.
    CHECK_THROWS_AS(Homomorphism(z2, z4, {{1}}), ValidationError);
    CHECK_NOTHROW(Homomorphism(z2, z4, {{2}}));
    CHECK_NOTHROW(Homomorphism(z4, z2, {{1}}));
}

TEST_CASE("adjoint against the pairing identity") {
    const FiniteAbelianGroup z2sq({2, 2});
    const Homomorphism f(z2sq, z2sq, {{1, 1}, {0, 1}});
    const Homomorphism adj = f.adjoint();
    CHECK(adj.matrix() == std::vector<Coords>{{1, 0}, {1, 1}});
    for (std::uint64_t x = 0; x < z2sq.order(); ++x)
        for (std::uint64_t y = 0; y < z2sq.order(); ++y) {
            const auto lhs = z2sq.pairing(f.apply(z2sq.element(x)), z2sq.element(y));
            const auto rhs = z2sq.pairing(z2sq.element(x), adj.apply(z2sq.element(y)));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }

    const FiniteAbelianGroup z6 = FiniteAbelianGroup::cyclic(6);
    const Homomorphism fn = Homomorphism::scalar(z6, 5);
    CHECK(fn.adjoint() == fn);
    CHECK(Homomorphism::identity(z6).adjoint() == Homomorphism::identity(z6));
}

TEST_CASE("adjoint involution and contravariance on random automorphisms") {
    Rng rng(5);
    for (const Coords& moduli :
         {Coords{2, 2}, Coords{4, 2}, Coords{3, 3}, Coords{8}, Coords{6}, Coords{2, 3}}) {
        const FiniteAbelianGroup g(moduli);
        const Homomorphism f = random_automorphism(rng, g);
        const Homomorphism h = random_automorphism(rng, g);
        CHECK(f.adjoint().adjoint() == f);
        CHECK(f.compose(h).adjoint() == h.adjoint().compose(f.adjoint()));
        // Exhaustive pairing identity for the adjoint.
        const Homomorphism adj = f.adjoint();
        for (std::uint64_t x = 0; x < g.order(); ++x)
            for (std::uint64_t y = 0; y < g.order(); ++y) {
                const auto lhs = g.pairing(f.apply(g.element(x)), g.element(y));
                const auto rhs = g.pairing(g.element(x), adj.apply(g.element(y)));
                CHECK(std::abs(lhs - rhs) < 1e-12);
            }
    }
}

TEST_CASE("kernel computation") {
    const FiniteAbelianGroup z5 = FiniteAbelianGroup::cyclic(5);
    CHECK(Homomorphism::scalar(z5, 3).kernel().is_trivial());

    const FiniteAbelianGroup z2sq({2, 2});
    CHECK(Homomorphism::scalar(z2sq, 2).kernel().size() == 4);

    const FiniteAbelianGroup z6 = FiniteAbelianGroup::cyclic(6);
    const Subgroup k = Homomorphism::scalar(z6, 3).kernel();
    CHECK(k.ranks() == std::vector<std::uint64_t>{0, 2, 4});
}

TEST_CASE("kernel and image sizes multiply to the order") {
    Rng rng(17);
    for (const Coords& moduli : {Coords{6}, Coords{4, 2}, Coords{2, 2, 3}, Coords{12}}) {
        const FiniteAbelianGroup g(moduli);
        for (int t = 0; t < 5; ++t) {
            std::vector<Coords> m(g.dim(), Coords(g.dim(), 0));
            for (std::size_t i = 0; i < g.dim(); ++i)
                for (std::size_t j = 0; j < g.dim(); ++j) {
                    const Coord step = g.moduli()[i] / std::gcd(g.moduli()[i], g.moduli()[j]);
                    m[i][j] = step * static_cast<Coord>(rng.below(
                                         static_cast<std::uint64_t>(g.moduli()[i] / step)));
                }
            const Homomorphism f(g, g, m);
            CHECK(f.kernel().size() * f.image().size() == g.order());
        }
    }
}

TEST_CASE("kernel condition") {
    const FiniteAbelianGroup z5 = FiniteAbelianGroup::cyclic(5);
    CHECK(check_condition1(Homomorphism::scalar(z5, 2)));

    const FiniteAbelianGroup z2sq({2, 2});
    CHECK(check_condition1(Homomorphism(z2sq, z2sq, {{0, 1}, {1, 1}})));
    CHECK_FALSE(check_condition1(Homomorphism::identity(z2sq)));

    const FiniteAbelianGroup z4 = FiniteAbelianGroup::cyclic(4);
    CHECK_THROWS_AS(check_condition1(Homomorphism::scalar(z4, 2)), DomainError);
}

TEST_CASE("kernel condition implies I+alpha is an automorphism") {
    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        const FuzzInstance inst = make_fuzz_instance(rng, 64);
        const Homomorphism ia =
            Homomorphism::identity(inst.group).plus(inst.alpha);
        if (check_condition1(inst.alpha)) CHECK(ia.is_automorphism());
    }
}

TEST_CASE("annihilator") {
    const FiniteAbelianGroup z4 = FiniteAbelianGroup::cyclic(4);
    const Subgroup s(z4, {0, 2});
    const Subgroup ann = annihilator(z4, s);
    CHECK(ann.ranks() == std::vector<std::uint64_t>{0, 2});

    CHECK(annihilator(z4, Subgroup::trivial(z4)).size() == 4);
    CHECK(annihilator(z4, Subgroup::whole(z4)).is_trivial());
}

TEST_CASE("annihilator duality on random subgroups") {
    Rng rng(31);
    for (const Coords& moduli : {Coords{8}, Coords{4, 2}, Coords{2, 2, 3}, Coords{6, 6}}) {
        const FiniteAbelianGroup g(moduli);
        for (int t = 0; t < 6; ++t) {
            const Subgroup s = random_subgroup(rng, g);
            const Subgroup ann = annihilator(g, s);
            CHECK(s.size() * ann.size() == g.order());
            CHECK(annihilator(g, ann) == s);
        }
    }
}

TEST_CASE("two torsion") {
    CHECK(two_torsion(FiniteAbelianGroup({2, 3})).ranks() ==
          std::vector<std::uint64_t>{0, 3});
    CHECK(two_torsion(FiniteAbelianGroup::cyclic(5)).is_trivial());

    const FiniteAbelianGroup g({4, 2});
    const Subgroup t = two_torsion(g);
    CHECK(t.size() == 4);
    for (const Coords& x : {Coords{0, 0}, Coords{2, 0}, Coords{0, 1}, Coords{2, 1}})
        CHECK(t.contains(x));
}

TEST_CASE("trivial group and capacity limits") {
    const FiniteAbelianGroup t = FiniteAbelianGroup::trivial();
    CHECK(t.order() == 1);
    CHECK(t.is_trivial());
    CHECK(t.pairing_is_one(t.zero(), t.zero()));

    CHECK_THROWS_AS(FiniteAbelianGroup({1}), ValidationError);
    CHECK_THROWS_AS(FiniteAbelianGroup(Coords{100, 100, 100}), CapacityError);
    CHECK_THROWS_AS(FiniteAbelianGroup({7}, 5), CapacityError);
}

TEST_CASE("subgroup validation") {
    const FiniteAbelianGroup z6 = FiniteAbelianGroup::cyclic(6);
    CHECK_THROWS_AS(Subgroup(z6, {0, 1}), ValidationError);        // not closed
    CHECK_THROWS_AS(Subgroup(z6, {1, 2, 3, 4, 5}), ValidationError); // missing zero
    CHECK_NOTHROW(Subgroup(z6, {0, 3}));
    CHECK(Subgroup::generated(z6, {Coords{2}}).size() == 3);
}
