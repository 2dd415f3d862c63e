#pragma once

#include <memory>
#include <vector>

#include "agr/errors.hpp"

namespace agr {

using Int = long long;

/// A numerical semigroup: a cofinite additive submonoid of the non-negative
/// integers, held in a canonical form (minimal generators, gap set, Frobenius
/// number, finite membership table). Immutable after construction; copies
/// share the underlying data.
class NumericalSemigroup {
public:
    /// Builds <gens>. Throws not_numerical when gcd(gens) != 1 and
    /// input_error on empty or non-positive input.
    static NumericalSemigroup from_generators(const std::vector<Int>& gens);

    /// The full monoid of non-negative integers.
    static NumericalSemigroup naturals();

    bool contains(Int x) const;

    /// Minimal generating set, sorted ascending.
    const std::vector<Int>& generators() const { return data_->gens; }

    /// Largest integer not in the semigroup; -1 for the full monoid.
    Int frobenius() const { return data_->frobenius; }

    /// Sorted positive integers missing from the semigroup.
    const std::vector<Int>& gaps() const { return data_->gaps; }

    Int genus() const { return static_cast<Int>(data_->gaps.size()); }
    Int multiplicity() const { return data_->gens.front(); }
    Int embedding_dimension() const { return static_cast<Int>(data_->gens.size()); }
    bool is_naturals() const { return data_->frobenius == -1; }

    bool operator==(const NumericalSemigroup& other) const {
        return data_ == other.data_ || data_->gens == other.data_->gens;
    }
    bool operator!=(const NumericalSemigroup& other) const { return !(*this == other); }

    /// Containment as sets: *this a subsemigroup of other.
    bool subset_of(const NumericalSemigroup& other) const;

private:
    struct Data {
        std::vector<Int> gens;
        std::vector<Int> gaps;
        Int frobenius = -1;
        // membership for 0 .. frobenius + max(gens); everything above is in.
        std::vector<bool> member;
    };
    explicit NumericalSemigroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

/// Apery set of H with respect to m (m must be a nonzero element of H):
/// the least element of H in each residue class mod m, listed by residue
/// 0..m-1. Throws not_member otherwise.
std::vector<Int> apery_set(const NumericalSemigroup& h, Int m);

/// Pseudo-Frobenius numbers PF(H) = { x not in H : x + h in H for all
/// nonzero h in H }, sorted ascending. PF(N) = {-1} by convention so that
/// the type of the full monoid is 1. |PF(H)| is the Cohen-Macaulay type.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& h);

Int semigroup_type(const NumericalSemigroup& h);

/// A relative ideal E of a numerical semigroup H: a finite union of
/// translates g + H, kept on a reduced generator set (no generator lies
/// in another's translate). E + H = E by construction.
class RelativeIdeal {
public:
    static RelativeIdeal from_generators(const NumericalSemigroup& h, std::vector<Int> gens);

    const NumericalSemigroup& base() const { return base_; }
    const std::vector<Int>& generators() const { return gens_; }
    Int min_value() const { return gens_.front(); }

    bool contains(Int x) const;

    /// E translated by t (element-wise).
    RelativeIdeal shifted(Int t) const;

    /// Set containment, decided on generators of the smaller ideal.
    bool subset_of(const RelativeIdeal& other) const;

    bool is_integral() const { return subset_of_base(); }

    bool operator==(const RelativeIdeal& other) const {
        return base_ == other.base_ && gens_ == other.gens_;
    }
    bool operator!=(const RelativeIdeal& other) const { return !(*this == other); }

private:
    RelativeIdeal(NumericalSemigroup base, std::vector<Int> reduced)
        : base_(std::move(base)), gens_(std::move(reduced)) {}
    bool subset_of_base() const;

    NumericalSemigroup base_;
    std::vector<Int> gens_; // reduced, sorted ascending
};

/// Minkowski sum E + F (the product of the corresponding monomial
/// fractional ideals). Throws mixed_base when the ambient semigroups differ.
RelativeIdeal ideal_sum(const RelativeIdeal& e, const RelativeIdeal& f);

/// E + E + ... + E (n summands), n >= 1; n = 0 gives the unit ideal H.
RelativeIdeal ideal_power(const RelativeIdeal& e, int n);

/// |E \ F| for F a subset of E (both cofinite above their shifts).
/// Throws not_contained when F is not a subset of E.
Int colength(const RelativeIdeal& outer, const RelativeIdeal& inner);

} // namespace agr
