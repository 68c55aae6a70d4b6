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

#include "heyde/extended.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace heyde {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    const __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw CapacityError("64-bit integer overflow in multiply");
    return static_cast<std::int64_t>(p);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    const __int128 s = static_cast<__int128>(a) + b;
    if (s > INT64_MAX || s < INT64_MIN) throw CapacityError("64-bit integer overflow in add");
    return static_cast<std::int64_t>(s);
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational Rational::operator+(const Rational& o) const {
    return make(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                checked_mul(den, o.den));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    return make(checked_mul(num, o.num), checked_mul(den, o.den));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

RealExtGroup::RealExtGroup(int dim, FiniteAbelianGroup finite)
    : real_dim(dim), finite_part(std::move(finite)) {
    if (dim < 0 || dim > 2)
        throw ValidationError("real dimension must be 0, 1 or 2, got " + std::to_string(dim));
}

std::string RealExtGroup::describe() const {
    std::string s = real_dim == 0 ? "" : (real_dim == 1 ? "R" : "R^2");
    if (!finite_part.is_trivial() || real_dim == 0) {
        if (!s.empty()) s += "x";
        s += finite_part.describe();
    }
    return s;
}

// ---------------------------------------------------------------------------

SolenoidSpec::SolenoidSpec(std::vector<std::int64_t> prefix,
                           std::vector<std::int64_t> infinite_primes)
    : prefix_(std::move(prefix)), infinite_primes_(std::move(infinite_primes)) {
    for (std::int64_t a : prefix_)
        if (a < 2) throw ValidationError("solenoid prefix terms must be > 1");
    std::sort(infinite_primes_.begin(), infinite_primes_.end());
    infinite_primes_.erase(std::unique(infinite_primes_.begin(), infinite_primes_.end()),
                           infinite_primes_.end());
    for (std::int64_t p : infinite_primes_)
        if (!is_prime(p))
            throw ValidationError("infinite_primes entry " + std::to_string(p) +
                                  " is not prime");
}

bool SolenoidSpec::prime_is_infinite(std::int64_t p) const {
    return std::binary_search(infinite_primes_.begin(), infinite_primes_.end(), p);
}

std::int64_t SolenoidSpec::sequence_term(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    if (infinite_primes_.empty())
        throw CapacityError("sequence term " + std::to_string(i) +
                            " exceeds the prefix and no infinite primes are declared");
    return infinite_primes_[(i - prefix_.size()) % infinite_primes_.size()];
}

std::int64_t SolenoidSpec::truncation_modulus(int level) const {
    if (level < 0) throw ValidationError("truncation level must be >= 0");
    std::int64_t m = 1;
    for (int i = 0; i < level; ++i) m = checked_mul(m, sequence_term(static_cast<std::size_t>(i)));
    return m;
}

FiniteAbelianGroup SolenoidSpec::adic_truncation(int level, std::uint64_t bound) const {
    const std::int64_t m = truncation_modulus(level);
    if (static_cast<std::uint64_t>(m) > bound)
        throw CapacityError("adic truncation modulus " + std::to_string(m) +
                            " exceeds enumeration bound");
    if (m == 1) return FiniteAbelianGroup(Coords{}, bound);
    return FiniteAbelianGroup(Coords{m}, bound);
}

bool SolenoidSpec::contains(const Rational& r) const {
    // Strip the infinitely occurring primes from the denominator; what is
    // left must divide the prefix product.
    std::int64_t d = r.den;
    for (std::int64_t p : infinite_primes_)
        while (d % p == 0) d /= p;
    std::int64_t prefix_product = 1;
    for (std::int64_t a : prefix_) prefix_product = checked_mul(prefix_product, a);
    return prefix_product % d == 0;
}

std::int64_t SolenoidSpec::dual_quotient_order(std::int64_t n) const {
    if (n == 0) throw DomainError("dual quotient of multiplication by 0");
    std::int64_t m = n < 0 ? -n : n;
    for (std::int64_t p : infinite_primes_)
        while (m % p == 0) m /= p;
    return m;
}

std::string SolenoidSpec::describe() const {
    std::string s = "solenoid dual, prefix (";
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(prefix_[i]);
    }
    s += "), infinite primes {";
    for (std::size_t i = 0; i < infinite_primes_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(infinite_primes_[i]);
    }
    s += "}";
    return s;
}

SolenoidDualElement solenoid_dual_element(const SolenoidSpec& spec, const Rational& r) {
    if (!spec.contains(r))
        throw DomainError("rational " + r.str() + " is not in the dual group of " +
                          spec.describe());
    std::int64_t m = 1;
    int level = 0;
    while (m % r.den != 0) {
        m = checked_mul(m, spec.sequence_term(static_cast<std::size_t>(level)));
        ++level;
    }
    return SolenoidDualElement{r, level};
}

std::vector<Rational> solenoid_dual_points(const SolenoidSpec& spec, int max_level,
                                           std::int64_t numerator_max) {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::vector<Rational> out;
    for (int level = 0; level <= max_level; ++level) {
        const std::int64_t d = spec.truncation_modulus(level);
        for (std::int64_t m = -numerator_max; m <= numerator_max; ++m) {
            const Rational r = Rational::make(m, d);
            if (seen.insert({r.num, r.den}).second) out.push_back(r);
        }
    }
    return out;
}

SolenoidAutomorphism make_solenoid_automorphism(const SolenoidSpec& spec, std::int64_t p,
                                                std::int64_t q) {
    if (p == 0 || q == 0) throw ValidationError("solenoid automorphism needs nonzero p and q");
    if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1)
        throw ValidationError("solenoid automorphism needs coprime p and q");
    for (std::int64_t n : {p, q}) {
        for (std::int64_t f : prime_factors(n < 0 ? -n : n)) {
            if (!spec.prime_is_infinite(f))
                throw ValidationError("multiplication by " + std::to_string(n) +
                                      " is not an automorphism: prime " + std::to_string(f) +
                                      " does not occur infinitely often");
        }
    }
    return SolenoidAutomorphism{p, q};
}

Rational apply(const SolenoidAutomorphism& a, const Rational& r) {
    return r * Rational::make(a.p, a.q);
}

SolenoidCond1 solenoid_condition1(const SolenoidSpec& spec, const SolenoidAutomorphism& a,
                                  int evidence_levels) {
    SolenoidCond1 out;
    out.sum = checked_add(a.p, a.q);
    if (out.sum == 0) {
        // alpha = -1: I + alpha is the zero map.
        out.holds = false;
        out.kernel_order = 0; // marks an infinite kernel
        return out;
    }
    out.kernel_order = spec.dual_quotient_order(out.sum);
    out.holds = out.kernel_order == 1;
    const int base = static_cast<int>(spec.prefix().size());
    for (int i = 0; i < evidence_levels; ++i) {
        SolenoidCond1Evidence ev;
        ev.level = base + i;
        ev.modulus = spec.truncation_modulus(ev.level);
        ev.generator_divisible =
            spec.contains(Rational::make(1, checked_mul(ev.modulus, out.sum)));
        out.evidence.push_back(ev);
    }
    return out;
}

bool solenoid_has_two_torsion(const SolenoidSpec& spec) {
    return spec.dual_quotient_order(2) != 1;
}

std::complex<double> solenoid_pairing(double t, const Rational& r) {
    const double phase = kTwoPi * r.to_double() * t;
    return {std::cos(phase), std::sin(phase)};
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 0) n = -n;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace heyde
