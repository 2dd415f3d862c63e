#include "agr/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace agr {

namespace {

constexpr Int kMaxSieve = 1 << 27; // ~134M table entries, far past desk scale

std::vector<bool> sieve(const std::vector<Int>& gens, Int bound) {
    std::vector<bool> in(static_cast<size_t>(bound) + 1, false);
    in[0] = true;
    for (Int x = 1; x <= bound; ++x) {
        for (Int g : gens) {
            if (g > x) break; // gens sorted
            if (in[static_cast<size_t>(x - g)]) {
                in[static_cast<size_t>(x)] = true;
                break;
            }
        }
    }
    return in;
}

// Index just past the last run of `run` consecutive members, or -1 if the
// table never settles.
Int last_gap(const std::vector<bool>& in, Int run) {
    Int consecutive = 0;
    Int frob = -1;
    for (Int x = 0; x < static_cast<Int>(in.size()); ++x) {
        if (in[static_cast<size_t>(x)]) {
            ++consecutive;
        } else {
            consecutive = 0;
            frob = x;
        }
    }
    return consecutive >= run ? frob : kMaxSieve;
}

} // namespace

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Int>& raw) {
    if (raw.empty()) throw input_error("semigroup generators: empty list");
    std::vector<Int> gens = raw;
    for (Int g : gens)
        if (g < 1) throw input_error("semigroup generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) throw not_numerical("gcd of generators is " + std::to_string(g) + ", not 1");

    const Int mult = gens.front();
    const Int maxgen = gens.back();

    // Find the Frobenius number: sieve with a growing bound until a run of
    // `mult` consecutive members shows up; everything past that run is in.
    Int bound = std::max<Int>(64, 4 * maxgen);
    Int frob;
    std::vector<bool> table;
    for (;;) {
        if (bound > kMaxSieve) throw input_error("semigroup generators too large for exact sieve");
        table = sieve(gens, bound);
        frob = last_gap(table, mult);
        if (frob < kMaxSieve) break;
        bound *= 2;
    }

    auto data = std::make_shared<Data>();
    data->frobenius = frob;

    // canonical finite table: 0 .. frobenius + max(gens)
    const Int keep = frob + maxgen;
    if (static_cast<Int>(table.size()) <= keep) table = sieve(gens, keep);
    table.resize(static_cast<size_t>(keep) + 1);
    data->member = std::move(table);

    for (Int x = 1; x <= frob; ++x)
        if (!data->member[static_cast<size_t>(x)]) data->gaps.push_back(x);

    // minimal generators: members not expressible as a sum of two nonzero members
    for (Int x : gens) {
        bool reducible = false;
        for (Int a = mult; a + a <= x && !reducible; ++a)
            if (data->member[static_cast<size_t>(a)] && data->member[static_cast<size_t>(x - a)])
                reducible = true;
        if (!reducible) data->gens.push_back(x);
    }
    assert(!data->gens.empty());
    assert(static_cast<Int>(data->gens.size()) <= mult || mult == 1);

    return NumericalSemigroup(std::move(data));
}

NumericalSemigroup NumericalSemigroup::naturals() {
    return from_generators({1});
}

bool NumericalSemigroup::contains(Int x) const {
    if (x < 0) return false;
    if (x < static_cast<Int>(data_->member.size())) return data_->member[static_cast<size_t>(x)];
    return true;
}

bool NumericalSemigroup::subset_of(const NumericalSemigroup& other) const {
    for (Int g : data_->gens)
        if (!other.contains(g)) return false;
    return true;
}

std::vector<Int> apery_set(const NumericalSemigroup& h, Int m) {
    if (m <= 0 || !h.contains(m)) throw not_member("apery set: " + std::to_string(m) + " is not a nonzero element");
    std::vector<Int> ap(static_cast<size_t>(m), -1);
    Int found = 0;
    for (Int x = 0; found < m; ++x) {
        size_t r = static_cast<size_t>(x % m);
        if (ap[r] < 0 && h.contains(x)) {
            ap[r] = x;
            ++found;
        }
    }
    return ap;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& h) {
    if (h.is_naturals()) return {-1};
    std::vector<Int> pf;
    for (Int x : h.gaps()) {
        bool all_in = true;
        for (Int g : h.generators()) {
            if (!h.contains(x + g)) { // checking generators suffices
                all_in = false;
                break;
            }
        }
        if (all_in) pf.push_back(x);
    }
    assert(!pf.empty() && pf.back() == h.frobenius());
    return pf;
}

Int semigroup_type(const NumericalSemigroup& h) {
    return static_cast<Int>(pseudo_frobenius(h).size());
}

RelativeIdeal RelativeIdeal::from_generators(const NumericalSemigroup& h, std::vector<Int> gens) {
    if (gens.empty()) throw input_error("relative ideal: empty generator list");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Int> reduced;
    for (Int g : gens) {
        bool redundant = false;
        for (Int kept : reduced) {
            if (h.contains(g - kept)) { // g lies in kept + H
                redundant = true;
                break;
            }
        }
        if (!redundant) reduced.push_back(g);
    }
    return RelativeIdeal(h, std::move(reduced));
}

bool RelativeIdeal::contains(Int x) const {
    for (Int g : gens_)
        if (base_.contains(x - g)) return true;
    return false;
}

RelativeIdeal RelativeIdeal::shifted(Int t) const {
    std::vector<Int> gens = gens_;
    for (Int& g : gens) g += t;
    return RelativeIdeal(base_, std::move(gens));
}

bool RelativeIdeal::subset_of(const RelativeIdeal& other) const {
    if (base_ != other.base_) throw mixed_base("subset check across different semigroups");
    for (Int g : gens_)
        if (!other.contains(g)) return false;
    return true;
}

bool RelativeIdeal::subset_of_base() const {
    for (Int g : gens_)
        if (!base_.contains(g)) return false;
    return true;
}

RelativeIdeal ideal_sum(const RelativeIdeal& e, const RelativeIdeal& f) {
    if (e.base() != f.base()) throw mixed_base("ideal sum across different semigroups");
    std::vector<Int> sums;
    sums.reserve(e.generators().size() * f.generators().size());
    for (Int a : e.generators())
        for (Int b : f.generators()) sums.push_back(a + b);
    return RelativeIdeal::from_generators(e.base(), std::move(sums));
}

RelativeIdeal ideal_power(const RelativeIdeal& e, int n) {
    if (n < 0) throw input_error("ideal power: negative exponent");
    RelativeIdeal acc = RelativeIdeal::from_generators(e.base(), {0});
    for (int i = 0; i < n; ++i) acc = ideal_sum(acc, e);
    return acc;
}

Int colength(const RelativeIdeal& outer, const RelativeIdeal& inner) {
    if (outer.base() != inner.base()) throw mixed_base("colength across different semigroups");
    if (!inner.subset_of(outer)) throw not_contained("colength: second ideal is not contained in the first");
    // Elements of outer \ inner live in [min(outer), min(inner) + frobenius]:
    // anything larger lands in inner via its minimal translate.
    Int count = 0;
    const Int hi = inner.min_value() + outer.base().frobenius();
    for (Int x = outer.min_value(); x <= hi; ++x)
        if (outer.contains(x) && !inner.contains(x)) ++count;
    return count;
}

} // namespace agr
