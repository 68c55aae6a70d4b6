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

#include "heyde/extended.hpp"
#include "heyde/rng.hpp"

using namespace heyde;

namespace {

// Admissible rationals drawn from the canonical sequence of the spec.
Rational random_dual_point(Rng& rng, const SolenoidSpec& spec, int max_level) {
    const int level = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_level + 1)));
    const std::int64_t den = spec.truncation_modulus(level);
    const std::int64_t num = static_cast<std::int64_t>(rng.below(41)) - 20;
    return Rational::make(num, den);
}

} // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
    const Rational a = Rational::make(5, 6);
    const Rational b = Rational::make(1, 4);
    CHECK((a + b) == Rational::make(13, 12));
    CHECK((a - b) == Rational::make(7, 12));
    CHECK((a * b) == Rational::make(5, 24));
    CHECK(Rational::make(-4, -6) == Rational::make(2, 3));
    CHECK(Rational::make(4, -6).num == -2);
    CHECK_THROWS_AS(Rational::make(1, 0), DomainError);
    CHECK_THROWS_AS(Rational::make(INT64_MAX, 3) * Rational::make(INT64_MAX, 1),
                    CapacityError);
}

TEST_CASE("dual membership by denominator divisibility") {
    const SolenoidSpec spec63({2, 3}, {2, 3});
    CHECK(spec63.contains(Rational::make(5, 6)));
    CHECK(spec63.contains(Rational::make(7, 48)));
    CHECK_FALSE(spec63.contains(Rational::make(1, 5)));

    // A prime that appears only in the prefix contributes only finitely.
    const SolenoidSpec spec2({2}, {3});
    CHECK(spec2.contains(Rational::make(1, 2)));
    CHECK(spec2.contains(Rational::make(1, 6)));
    CHECK_FALSE(spec2.contains(Rational::make(1, 4)));
}

TEST_CASE("dual membership is closed under group operations") {
    Rng rng(3);
    const SolenoidSpec spec({2, 3}, {2, 3});
    for (int t = 0; t < 300; ++t) {
        const Rational a = random_dual_point(rng, spec, 4);
        const Rational b = random_dual_point(rng, spec, 4);
        CHECK(spec.contains(a));
        CHECK(spec.contains(a + b));
        CHECK(spec.contains(a - b));
        CHECK(spec.contains(-a));
    }
}

TEST_CASE("automorphism action preserves membership") {
    Rng rng(9);
    const SolenoidSpec spec({2, 3}, {2, 3});
    const SolenoidAutomorphism a13 = make_solenoid_automorphism(spec, 1, 3);
    const SolenoidAutomorphism a23 = make_solenoid_automorphism(spec, 2, 3);
    for (int t = 0; t < 200; ++t) {
        const Rational r = random_dual_point(rng, spec, 3);
        CHECK(spec.contains(apply(a13, r)));
        CHECK(spec.contains(apply(a23, r)));
    }
}

TEST_CASE("automorphism validation") {
    const SolenoidSpec spec({2, 3}, {2, 3});
    CHECK_NOTHROW(make_solenoid_automorphism(spec, -1, 3));
    CHECK_THROWS_AS(make_solenoid_automorphism(spec, 5, 3), ValidationError);
    CHECK_THROWS_AS(make_solenoid_automorphism(spec, 2, 4), ValidationError); // not coprime
    CHECK_THROWS_AS(make_solenoid_automorphism(spec, 0, 1), ValidationError);
}

TEST_CASE("kernel rule for the one-plus-alpha map") {
    const SolenoidSpec spec({2, 3}, {2, 3});
    const SolenoidCond1 res23 =
        solenoid_condition1(spec, make_solenoid_automorphism(spec, 2, 3));
    CHECK_FALSE(res23.holds);
    CHECK(res23.kernel_order == 5);
    for (const SolenoidCond1Evidence& ev : res23.evidence)
        CHECK_FALSE(ev.generator_divisible);

    const SolenoidCond1 res13 =
        solenoid_condition1(spec, make_solenoid_automorphism(spec, 1, 3));
    CHECK(res13.holds);
    CHECK(res13.kernel_order == 1);
    for (const SolenoidCond1Evidence& ev : res13.evidence)
        CHECK(ev.generator_divisible);

    // alpha = 1/1: p+q = 2, trivial kernel exactly when 2 recurs.
    CHECK(solenoid_condition1(spec, make_solenoid_automorphism(spec, 1, 1)).holds);
    const SolenoidSpec spec5({5}, {5});
    CHECK_FALSE(solenoid_condition1(spec5, make_solenoid_automorphism(spec5, 1, 1)).holds);

    // alpha = -1: the map is zero.
    const SolenoidCond1 neg = solenoid_condition1(spec, make_solenoid_automorphism(spec, -1, 1));
    CHECK_FALSE(neg.holds);
    CHECK(neg.kernel_order == 0);
}

TEST_CASE("two-torsion rule") {
    CHECK_FALSE(solenoid_has_two_torsion(SolenoidSpec({2}, {2})));
    CHECK(solenoid_has_two_torsion(SolenoidSpec({3}, {3})));
    CHECK_FALSE(solenoid_has_two_torsion(SolenoidSpec({2, 5}, {2, 5})));
    CHECK(SolenoidSpec({3}, {3}).dual_quotient_order(2) == 2);
}

TEST_CASE("adic truncations and tower compatibility") {
    const SolenoidSpec spec({2, 3, 4}, {2, 3});
    CHECK(spec.adic_truncation(0).is_trivial());
    CHECK(spec.adic_truncation(2).moduli() == Coords{6});
    CHECK(spec.adic_truncation(3).moduli() == Coords{24});

    // Projection Z(a0...aN) -> Z(a0...a_{N-1}) is a surjective homomorphism.
    for (int level = 1; level <= 3; ++level) {
        const FiniteAbelianGroup big = spec.adic_truncation(level + 1);
        const FiniteAbelianGroup small = spec.adic_truncation(level);
        const Homomorphism proj(big, small, {{1}});
        CHECK(proj.image().size() == small.order());
    }

    const SolenoidSpec no_tail({2, 3}, {});
    CHECK_THROWS_AS(no_tail.truncation_modulus(3), CapacityError);
    CHECK_THROWS_AS(SolenoidSpec({2}, {4}), ValidationError); // 4 is not prime
    CHECK_THROWS_AS(SolenoidSpec({1}, {2}), ValidationError);
}

TEST_CASE("dual element admissibility witness") {
    const SolenoidSpec spec({2, 3}, {2, 3});
    CHECK(solenoid_dual_element(spec, Rational::make(5, 6)).level == 2);
    CHECK(solenoid_dual_element(spec, Rational::make(1, 2)).level == 1);
    CHECK(solenoid_dual_element(spec, Rational::integer(7)).level == 0);
    CHECK_THROWS_AS(solenoid_dual_element(spec, Rational::make(1, 5)), DomainError);
}

TEST_CASE("pairing on the dense one-parameter image") {
    CHECK(std::abs(solenoid_pairing(0.0, Rational::make(3, 4)) -
                   std::complex<double>{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(solenoid_pairing(1.0, Rational::make(1, 2)) -
                   std::complex<double>{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs(solenoid_pairing(3.0, Rational::make(1, 6)) -
                   std::complex<double>{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("dual point enumeration is deduplicated and level-bounded") {
    const SolenoidSpec spec({2, 3}, {2, 3});
    const auto pts = solenoid_dual_points(spec, 2, 6);
    for (const Rational& r : pts) CHECK(spec.contains(r));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            CHECK_FALSE(pts[i] == pts[j]);
    CHECK(pts.size() > 20);
}

TEST_CASE("real-extended group shape") {
    const RealExtGroup g(1, FiniteAbelianGroup::cyclic(2));
    CHECK(g.describe() == "RxZ(2)");
    CHECK_THROWS_AS(RealExtGroup(3, FiniteAbelianGroup::trivial()), ValidationError);
}
