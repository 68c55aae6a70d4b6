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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "heyde/group.hpp"

namespace heyde {

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Exact rational with 64-bit numerator/denominator, reduced, denominator
/// positive. Arithmetic goes through 128-bit intermediates and raises
/// CapacityError instead of overflowing.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    static Rational integer(std::int64_t n) { return Rational{n, 1}; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return Rational{-num, den}; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool is_zero() const { return num == 0; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

/// Group of the form R^d x F with F finite; d in {0, 1, 2}.
struct RealExtGroup {
    int real_dim = 1;
    FiniteAbelianGroup finite_part;

    RealExtGroup() = default;
    RealExtGroup(int dim, FiniteAbelianGroup finite);
    bool same_shape(const RealExtGroup& o) const {
        return real_dim == o.real_dim && finite_part.same_moduli(o.finite_part);
    }
    std::string describe() const;
};

/// Defining data of an a-adic solenoid at desk scale: a finite prefix of the
/// sequence plus the set of primes declared to occur infinitely often in the
/// tail. The solenoid itself is never materialized; computations happen on
/// the dual side (rationals with admissible denominators) and on finite
/// truncations of the adic-integer part.
class SolenoidSpec {
  public:
    SolenoidSpec(std::vector<std::int64_t> prefix, std::vector<std::int64_t> infinite_primes);

    const std::vector<std::int64_t>& prefix() const { return prefix_; }
    const std::vector<std::int64_t>& infinite_primes() const { return infinite_primes_; }
    bool prime_is_infinite(std::int64_t p) const;

    /// Term i of the canonical sequence: the prefix, then the sorted
    /// infinite primes repeated cyclically.
    std::int64_t sequence_term(std::size_t i) const;

    /// Product of the first `level` sequence terms (level 0 -> 1).
    std::int64_t truncation_modulus(int level) const;

    /// Finite quotient standing in for the adic-integer part at this level:
    /// the cyclic group Z(a_0 * ... * a_{level-1}).
    FiniteAbelianGroup adic_truncation(
        int level,
        std::uint64_t enumeration_bound = FiniteAbelianGroup::kDefaultEnumerationBound) const;

    /// Membership of a reduced rational in the dual group: true iff its
    /// denominator divides some admissible product a_0 ... a_n.
    bool contains(const Rational& r) const;

    /// Order of the quotient (dual)/(n * dual): |n| with all factors of the
    /// infinite primes removed. 1 means multiplication by n is onto.
    std::int64_t dual_quotient_order(std::int64_t n) const;

    std::string describe() const;

  private:
    std::vector<std::int64_t> prefix_;
    std::vector<std::int64_t> infinite_primes_; // sorted, distinct
};

/// A point of the solenoid dual together with its admissibility witness: the
/// smallest level whose truncation product clears the denominator.
struct SolenoidDualElement {
    Rational value;
    int level = 0;
};

SolenoidDualElement solenoid_dual_element(const SolenoidSpec& spec, const Rational& r);

/// Deterministic enumeration of dual points up to a denominator level:
/// { m / (a_0...a_{l-1}) : 0 <= l <= max_level, |m| <= numerator_max }.
std::vector<Rational> solenoid_dual_points(const SolenoidSpec& spec, int max_level,
                                           std::int64_t numerator_max);

/// Automorphism of the solenoid given by multiplication by p/q. Validity
/// requires gcd(p, q) = 1 and every prime factor of |p| and |q| in the
/// infinite set.
struct SolenoidAutomorphism {
    std::int64_t p = 1;
    std::int64_t q = 1;
    Rational ratio() const { return Rational::make(p, q); }
};

SolenoidAutomorphism make_solenoid_automorphism(const SolenoidSpec& spec, std::int64_t p,
                                                std::int64_t q);

/// Adjoint action of p/q on a dual point: multiplication by p/q.
Rational apply(const SolenoidAutomorphism& a, const Rational& r);

struct SolenoidCond1Evidence {
    int level = 0;
    std::int64_t modulus = 1;        // a_0 ... a_{level-1}
    bool generator_divisible = false; // 1/modulus divisible by p+q inside the dual
};

struct SolenoidCond1 {
    bool holds = false;
    std::int64_t sum = 0;                 // p + q
    std::int64_t kernel_order = 1;        // |Ker(I + alpha)| = dual quotient order
    std::vector<SolenoidCond1Evidence> evidence;
};

/// Kernel condition Ker(I + alpha) = {0} for alpha = p/q, decided by the
/// divisibility rule (every prime of p+q occurs infinitely often) and
/// accompanied by per-level divisibility evidence on the dual generators.
SolenoidCond1 solenoid_condition1(const SolenoidSpec& spec, const SolenoidAutomorphism& a,
                                  int evidence_levels = 3);

/// Whether the solenoid contains an element of order 2 (equivalently,
/// multiplication by 2 is not onto on the dual).
bool solenoid_has_two_torsion(const SolenoidSpec& spec);

/// Pairing against the dense one-parameter image of the reals:
/// exp(2*pi*i * r * t).
std::complex<double> solenoid_pairing(double t, const Rational& r);

/// Prime factorization by trial division (desk scale).
std::vector<std::int64_t> prime_factors(std::int64_t n);

} // namespace heyde
