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
#include <span>
#include <string>
#include <vector>

#include "heyde/errors.hpp"

namespace heyde {

using Coord = std::int64_t;
using Coords = std::vector<Coord>;

/// Finite abelian group presented as a direct sum of cyclic factors Z(n_i),
/// n_i >= 2. The character group is represented with the same moduli; an
/// element of either side is a coordinate vector reduced mod n_i, and the
/// pairing of x with the character y is exp(2*pi*i * sum_i x_i y_i / n_i).
///
/// An empty moduli list is the trivial group (order 1, single element with
/// zero coordinates).
///
/// Everything that enumerates elements (kernels, annihilators, bijectivity
/// tests) is guarded by an enumeration bound; exceeding it raises
/// CapacityError. Values are immutable after construction and safe to share
/// across threads.
class FiniteAbelianGroup {
  public:
    static constexpr std::uint64_t kDefaultEnumerationBound = 100000;

    FiniteAbelianGroup() : FiniteAbelianGroup(Coords{}) {}
    explicit FiniteAbelianGroup(Coords moduli,
                                std::uint64_t enumeration_bound = kDefaultEnumerationBound);

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(Coords{}); }
    static FiniteAbelianGroup cyclic(Coord n) { return FiniteAbelianGroup(Coords{n}); }

    const Coords& moduli() const { return moduli_; }
    std::size_t dim() const { return moduli_.size(); }
    std::uint64_t order() const { return order_; }
    std::uint64_t enumeration_bound() const { return bound_; }
    bool same_moduli(const FiniteAbelianGroup& other) const {
        return moduli_ == other.moduli_;
    }
    bool is_trivial() const { return order_ == 1; }
    std::string describe() const;

    /// Throws CapacityError unless order <= enumeration bound.
    void require_enumerable(const char* what) const;

    Coords zero() const { return Coords(moduli_.size(), 0); }
    Coords reduce(Coords x) const;
    Coords add(std::span<const Coord> a, std::span<const Coord> b) const;
    Coords sub(std::span<const Coord> a, std::span<const Coord> b) const;
    Coords neg(std::span<const Coord> a) const;
    Coords scale(Coord k, std::span<const Coord> a) const;
    bool is_zero(std::span<const Coord> a) const;
    void check_coords(std::span<const Coord> a, const char* what) const;

    /// Mixed-radix index of an element; inverse of element().
    std::uint64_t rank_of(std::span<const Coord> a) const;
    Coords element(std::uint64_t rank) const;

    std::uint64_t rank_add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t rank_neg(std::uint64_t a) const;

    /// Character pairing (x, y); a complex number of modulus 1.
    std::complex<double> pairing(std::span<const Coord> x, std::span<const Coord> y) const;

    /// Exact integer test for (x, y) == 1 (no floating point).
    bool pairing_is_one(std::span<const Coord> x, std::span<const Coord> y) const;

    /// Numerator of the pairing phase over the common denominator lcm(n_i),
    /// reduced to [0, lcm): pairing == exp(2*pi*i * phase / lcm).
    Coord pairing_phase_numerator(std::span<const Coord> x, std::span<const Coord> y) const;
    Coord phase_denominator() const { return lcm_; }

  private:
    Coords moduli_;
    std::uint64_t order_ = 1;
    std::uint64_t bound_ = kDefaultEnumerationBound;
    Coord lcm_ = 1;
};

/// Subgroup stored as the explicit sorted set of element ranks.
class Subgroup {
  public:
    Subgroup(FiniteAbelianGroup parent, std::vector<std::uint64_t> sorted_ranks);

    static Subgroup trivial(const FiniteAbelianGroup& g);
    static Subgroup whole(const FiniteAbelianGroup& g);
    static Subgroup generated(const FiniteAbelianGroup& g,
                              const std::vector<Coords>& generators);

    const FiniteAbelianGroup& parent() const { return parent_; }
    const std::vector<std::uint64_t>& ranks() const { return ranks_; }
    std::size_t size() const { return ranks_.size(); }
    bool is_trivial() const { return ranks_.size() == 1; }
    bool contains_rank(std::uint64_t r) const;
    bool contains(std::span<const Coord> x) const;
    std::vector<Coords> elements() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_.same_moduli(b.parent_) && a.ranks_ == b.ranks_;
    }

  private:
    FiniteAbelianGroup parent_;
    std::vector<std::uint64_t> ranks_;
};

/// Homomorphism between finite abelian groups, given by an integer matrix
/// acting on coordinates (target rows x source columns). Well-definedness
/// requires target_n_i | M[i][j] * source_n_j for all entries; the
/// constructor rejects matrices violating it.
class Homomorphism {
  public:
    Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                 std::vector<Coords> matrix);

    static Homomorphism identity(const FiniteAbelianGroup& g);
    /// The map x -> n*x.
    static Homomorphism scalar(const FiniteAbelianGroup& g, Coord n);

    const FiniteAbelianGroup& source() const { return source_; }
    const FiniteAbelianGroup& target() const { return target_; }
    const std::vector<Coords>& matrix() const { return matrix_; }
    bool is_endomorphism() const { return source_.same_moduli(target_); }

    Coords apply(std::span<const Coord> x) const;
    std::uint64_t apply_rank(std::uint64_t r) const;

    /// this \circ inner.
    Homomorphism compose(const Homomorphism& inner) const;
    /// Pointwise sum; requires matching source and target.
    Homomorphism plus(const Homomorphism& other) const;

    /// Adjoint on the dual side: (f x, y) = (x, adjoint(f) y) for all x, y.
    Homomorphism adjoint() const;

    /// Bijectivity on the element set, checked by enumeration.
    bool is_automorphism() const;

    Subgroup kernel() const;
    Subgroup image() const;

    friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
        return a.source_.same_moduli(b.source_) && a.target_.same_moduli(b.target_) &&
               a.matrix_ == b.matrix_;
    }

  private:
    FiniteAbelianGroup source_;
    FiniteAbelianGroup target_;
    std::vector<Coords> matrix_;
};

/// Kernel condition on the automorphism alpha: Ker(I + alpha) = {0}.
/// Throws DomainError when alpha is not an automorphism.
bool check_condition1(const Homomorphism& alpha);

/// Annihilator of S in the dual: {y : (x, y) = 1 for all x in S}. `dual`
/// must carry the same moduli as S's parent.
Subgroup annihilator(const FiniteAbelianGroup& dual, const Subgroup& s);

/// Elements of order dividing 2, i.e. the kernel of x -> 2x.
Subgroup two_torsion(const FiniteAbelianGroup& g);

} // namespace heyde
