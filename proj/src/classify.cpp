#include "agr/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace agr {

namespace {

std::string gens_to_string(const NumericalSemigroup& h) {
    std::string s;
    for (Int g : h.generators()) {
        if (!s.empty()) s += ',';
        s += std::to_string(g);
    }
    return s;
}

/// Elements of K(H) \ H (a subset of the gap set).
std::vector<Int> canonical_minus_semigroup(const NumericalSemigroup& h) {
    std::vector<Int> out;
    for (Int x : h.gaps())
        if (!h.contains(h.frobenius() - x)) out.push_back(x);
    return out;
}

} // namespace

RelativeIdeal canonical_ideal(const NumericalSemigroup& h) {
    const Int f = h.frobenius();
    std::vector<Int> candidates;
    for (Int x = 0; x <= std::max<Int>(f, 0); ++x)
        if (!h.contains(f - x)) candidates.push_back(x);
    auto k = RelativeIdeal::from_generators(h, std::move(candidates));
    // H <= K <= N with min value 0
    if (k.min_value() != 0) throw internal_error("canonical ideal does not start at 0");
    for (Int g : h.generators())
        if (!k.contains(g)) throw internal_error("canonical ideal does not contain H");
    return k;
}

ShiftedCanonicalIdeal canonical_ideal_shifted(const NumericalSemigroup& h) {
    auto k = canonical_ideal(h);
    const Int m = h.multiplicity();
    for (Int shift = m;; shift += m) {
        auto moved = k.shifted(shift);
        if (moved.is_integral()) return {moved, shift};
    }
}

bool is_almost_symmetric(const NumericalSemigroup& h) {
    // (H \ {0}) + K <= H reduces to gens + (K \ H) <= H.
    for (Int x : canonical_minus_semigroup(h))
        for (Int g : h.generators())
            if (!h.contains(x + g)) return false;
    return true;
}

SymmetryClass symmetry_class(const NumericalSemigroup& h) {
    const Int type = semigroup_type(h);
    const bool symmetric = 2 * h.genus() == h.frobenius() + 1;
    const bool almost = is_almost_symmetric(h);

    // two independent routes to the same predicates
    if (symmetric != (type == 1))
        throw internal_error("symmetry cross-check failed: gap pairing vs type on " + gens_to_string(h));
    if (almost != (2 * h.genus() == h.frobenius() + type))
        throw internal_error("almost-symmetry cross-check failed: mK <= R vs 2g = F + t on " + gens_to_string(h));

    if (symmetric) return {SymmetryClass::Kind::Symmetric, type};
    if (almost && type == 2 && h.frobenius() % 2 == 0)
        return {SymmetryClass::Kind::PseudoSymmetric, type};
    if (almost) return {SymmetryClass::Kind::AlmostSymmetricProper, type};
    return {SymmetryClass::Kind::None, type};
}

ClassificationReport classify_local(const NumericalSemigroup& h) {
    auto sym = symmetry_class(h);

    ClassificationReport r;
    r.kind = RingClass::SemigroupRing;
    r.input = gens_to_string(h);
    r.krull_dim = 1;
    r.multiplicity = h.multiplicity();
    r.embedding_dim = h.embedding_dimension();
    r.cohen_macaulay = TriState::True;
    r.cm_type = sym.type;
    r.a_invariant = h.frobenius();
    r.gorenstein = tri(sym.kind == SymmetryClass::Kind::Symmetric);
    r.almost_gorenstein = tri(sym.almost_symmetric());
    r.pseudo_gorenstein = tri(sym.almost_symmetric() && sym.type <= 2);

    r.notes.push_back("type = |PF(H)| = " + std::to_string(sym.type));
    switch (sym.kind) {
        case SymmetryClass::Kind::Symmetric:
            r.notes.push_back("symmetric: K(H) = H, Gorenstein");
            break;
        case SymmetryClass::Kind::PseudoSymmetric:
            r.notes.push_back("pseudo-symmetric: almost symmetric of type 2, F/2 = "
                              + std::to_string(h.frobenius() / 2) + " in PF(H)");
            break;
        case SymmetryClass::Kind::AlmostSymmetricProper:
            r.notes.push_back("almost symmetric: (H\\{0}) + K(H) <= H, type >= 3");
            break;
        case SymmetryClass::Kind::None:
            r.notes.push_back("not almost symmetric: (H\\{0}) + K(H) exceeds H");
            break;
    }
    r.notes.push_back("verdicts use infinite residue field semantics");

    validate(r);
    return r;
}

HilbertSummary hilbert_coeffs(const NumericalSemigroup& h, const RelativeIdeal& e, int max_n) {
    if (e.base() != h) throw mixed_base("hilbert_coeffs: ideal lives over a different semigroup");
    if (max_n < 3) throw input_error("hilbert_coeffs: max_n must be at least 3");
    if (!e.is_integral()) throw not_integral("hilbert_coeffs: ideal is not contained in H");

    const auto unit = RelativeIdeal::from_generators(h, {0});
    std::vector<Int> lengths; // L(n) = |H \ E^{n+1}|
    int reduction = -1;
    RelativeIdeal power = unit; // E^0
    for (int n = 0; n <= max_n; ++n) {
        auto next = ideal_sum(power, e); // E^{n+1}
        lengths.push_back(colength(unit, next));
        if (reduction < 0 && next == power.shifted(e.min_value())) reduction = n;
        power = std::move(next);
    }

    // first differences must sit still for three consecutive steps, with the
    // matching e1 value also constant across the window
    for (int n = 1; n + 2 <= max_n; ++n) {
        const Int d0 = lengths[n] - lengths[n - 1];
        const Int d1 = lengths[n + 1] - lengths[n];
        const Int d2 = lengths[n + 2] - lengths[n + 1];
        if (d0 != d1 || d1 != d2) continue;
        const Int e1 = d0 * (n + 1) - lengths[n];
        if (d0 * (n + 2) - lengths[n + 1] != e1 || d0 * (n + 3) - lengths[n + 2] != e1) continue;
        if (reduction < 0)
            throw no_stabilization("reduction number not reached by max_n = " + std::to_string(max_n));
        return {d0, e1, reduction, std::move(lengths)};
    }
    throw no_stabilization("Hilbert function not stabilized by max_n = " + std::to_string(max_n));
}

std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& h) {
    const auto& gaps = h.gaps();
    const int g = static_cast<int>(gaps.size());
    if (g > 22) throw input_error("oversemigroup enumeration capped at genus 22");
    const Int f = h.frobenius();

    std::vector<NumericalSemigroup> out;
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
        std::vector<Int> added;
        for (int i = 0; i < g; ++i)
            if (mask >> i & 1u) added.push_back(gaps[static_cast<size_t>(i)]);

        auto member = [&](Int x) {
            if (x < 0) return false;
            if (x > f) return true;
            if (h.contains(x)) return true;
            return std::binary_search(added.begin(), added.end(), x);
        };

        // S = H union added is a semigroup iff added+added and added+gens stay in S
        bool closed = true;
        for (size_t i = 0; i < added.size() && closed; ++i) {
            for (size_t j = i; j < added.size() && closed; ++j)
                if (!member(added[i] + added[j])) closed = false;
            for (Int gen : h.generators())
                if (!member(added[i] + gen)) { closed = false; break; }
        }
        if (!closed) continue;

        Int mult = 1;
        while (!member(mult)) ++mult;
        std::vector<Int> gens;
        for (Int x = 1; x <= std::max(f + mult, mult); ++x) {
            if (!member(x)) continue;
            bool reducible = false;
            for (Int a = mult; a + a <= x && !reducible; ++a)
                if (member(a) && member(x - a)) reducible = true;
            if (!reducible) gens.push_back(x);
        }
        out.push_back(NumericalSemigroup::from_generators(gens));
    }

    std::sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
        if (a.genus() != b.genus()) return a.genus() > b.genus();
        return a.gaps() < b.gaps();
    });
    return out;
}

OversemigroupChain oversemigroup_chain(const NumericalSemigroup& h) {
    auto over = oversemigroups(h);
    for (size_t i = 0; i + 1 < over.size(); ++i) {
        if (!over[i].subset_of(over[i + 1])) {
            // sorted by genus, so failed inclusion means incomparable
            return {false, {}, std::make_pair(over[i], over[i + 1])};
        }
    }
    if (h.multiplicity() == 2 && static_cast<Int>(over.size()) != h.genus() + 1)
        throw internal_error("multiplicity-2 oversemigroup tower has wrong length");
    return {true, std::move(over), std::nullopt};
}

} // namespace agr
