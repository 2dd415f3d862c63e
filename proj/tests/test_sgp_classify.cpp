#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "agr/classify.hpp"
#include "support/oracles.hpp"

using agr::Int;
using agr::NumericalSemigroup;
using agr::RelativeIdeal;
using agr::TriState;
using Kind = agr::SymmetryClass::Kind;

namespace {

NumericalSemigroup sgp(std::vector<Int> gens) {
    return NumericalSemigroup::from_generators(gens);
}

std::vector<Int> set_difference_elements(const RelativeIdeal& k, const NumericalSemigroup& h) {
    std::vector<Int> out;
    for (Int x = 0; x <= h.frobenius(); ++x)
        if (k.contains(x) && !h.contains(x)) out.push_back(x);
    return out;
}

// Generators of the a / al-1 / al+i family of almost Gorenstein monomial
// curves with type a - 2.
std::vector<Int> type_family(Int a, Int l) {
    std::vector<Int> gens{a, a * l - 1};
    for (Int i = 1; i <= a - 3; ++i) gens.push_back(a * l + i);
    return gens;
}

// Generators a+i, 0 <= i <= a-1, skipping i = a-2: the pseudo-Gorenstein
// family with K = R + R t^{a-1}.
std::vector<Int> pg_family(Int a) {
    std::vector<Int> gens;
    for (Int i = 0; i <= a - 1; ++i)
        if (i != a - 2) gens.push_back(a + i);
    return gens;
}

} // namespace

TEST_CASE("canonical ideal") {
    SUBCASE("<3,4,5>: K = N minus {2}") {
        auto h = sgp({3, 4, 5});
        auto k = canonical_ideal(h);
        CHECK(k.generators() == std::vector<Int>{0, 1});
        CHECK_FALSE(k.contains(2));
        for (Int x : {0, 1, 3, 4, 5, 6, 7}) CHECK(k.contains(x));
    }
    SUBCASE("<4,6,11,13>: K \\ H = {2, 7}") {
        auto h = sgp({4, 6, 11, 13});
        CHECK(set_difference_elements(canonical_ideal(h), h) == std::vector<Int>{2, 7});
    }
    SUBCASE("symmetric <3,4>: K = H") {
        auto h = sgp({3, 4});
        auto k = canonical_ideal(h);
        CHECK(k == RelativeIdeal::from_generators(h, {0}));
    }
    SUBCASE("full monoid: K = H") {
        auto n = NumericalSemigroup::naturals();
        CHECK(canonical_ideal(n).generators() == std::vector<Int>{0});
    }
    SUBCASE("H <= K <= N and |K \\ H| = 2 genus - F - 1, exhaustive F <= 15") {
        for (auto mask : oracle::semigroup_masks_up_to(15)) {
            auto h = sgp(oracle::mask_minimal_generators(mask, 15));
            auto k = canonical_ideal(h);
            CHECK(k.min_value() == 0);
            for (Int g : h.generators()) CHECK(k.contains(g));
            for (Int x : k.generators()) CHECK(x >= 0);
            Int diff = static_cast<Int>(set_difference_elements(k, h).size());
            CHECK(diff == 2 * h.genus() - h.frobenius() - 1);
        }
    }
}

TEST_CASE("shifted canonical ideal is integral") {
    for (auto gens : std::vector<std::vector<Int>>{{3, 4, 5}, {4, 5, 7}, {5, 7, 9}, {4, 6, 11, 13}, {3, 4}}) {
        auto h = sgp(gens);
        auto [ideal, shift] = canonical_ideal_shifted(h);
        CHECK(shift % h.multiplicity() == 0);
        CHECK(shift > 0);
        CHECK(ideal.is_integral());
        CHECK(ideal == canonical_ideal(h).shifted(shift));
    }
    SUBCASE("almost symmetric semigroups need exactly one multiplicity step") {
        CHECK(canonical_ideal_shifted(sgp({3, 4, 5})).shift == 3);
        CHECK(canonical_ideal_shifted(sgp({3, 4, 5})).ideal.generators() == std::vector<Int>{3, 4});
        CHECK(canonical_ideal_shifted(sgp({4, 5, 7})).shift == 4);
    }
}

TEST_CASE("symmetry classes") {
    SUBCASE("worked examples") {
        // type 2, almost symmetric, even Frobenius: pseudo-symmetric
        CHECK(symmetry_class(sgp({4, 5, 7})) == agr::SymmetryClass{Kind::PseudoSymmetric, 2});
        CHECK(symmetry_class(sgp({3, 4, 5})) == agr::SymmetryClass{Kind::PseudoSymmetric, 2});
        CHECK(symmetry_class(sgp({5, 7, 9})) == agr::SymmetryClass{Kind::None, 2});
        CHECK(symmetry_class(sgp({3, 4})) == agr::SymmetryClass{Kind::Symmetric, 1});
        CHECK(symmetry_class(sgp({4, 6, 11, 13})) == agr::SymmetryClass{Kind::AlmostSymmetricProper, 3});
        CHECK(symmetry_class(NumericalSemigroup::naturals()) == agr::SymmetryClass{Kind::Symmetric, 1});
    }
    SUBCASE("symmetric iff gap pairing iff type 1, exhaustive F <= 15") {
        for (auto mask : oracle::semigroup_masks_up_to(15)) {
            auto h = sgp(oracle::mask_minimal_generators(mask, 15));
            auto sym = symmetry_class(h);
            bool pairing = true;
            for (Int x = 0; x <= h.frobenius(); ++x)
                if (h.contains(x) == h.contains(h.frobenius() - x)) pairing = false;
            if (h.is_naturals()) pairing = true;
            CHECK((sym.kind == Kind::Symmetric) == pairing);
            CHECK((sym.kind == Kind::Symmetric) == (sym.type == 1));
            CHECK((sym.kind == Kind::Symmetric) == (canonical_ideal(h) == RelativeIdeal::from_generators(h, {0})));
        }
    }
    SUBCASE("almost symmetric iff 2 genus = F + type, exhaustive F <= 15") {
        for (auto mask : oracle::semigroup_masks_up_to(15)) {
            auto h = sgp(oracle::mask_minimal_generators(mask, 15));
            bool numeric = 2 * h.genus() == h.frobenius() + agr::semigroup_type(h);
            CHECK(agr::is_almost_symmetric(h) == numeric);
            CHECK(symmetry_class(h).almost_symmetric() == numeric);
        }
    }
}

TEST_CASE("local classification") {
    SUBCASE("<3,4,5>: almost Gorenstein, not Gorenstein, type 2") {
        auto r = classify_local(sgp({3, 4, 5}));
        CHECK(r.almost_gorenstein == TriState::True);
        CHECK(r.gorenstein == TriState::False);
        CHECK(r.cm_type == 2);
        CHECK(r.pseudo_gorenstein == TriState::True);
        CHECK(r.krull_dim == 1);
        CHECK(r.cohen_macaulay == TriState::True);
        CHECK(r.multiplicity == 3);
        CHECK(r.embedding_dim == 3);
    }
    SUBCASE("<3,5,7>: almost Gorenstein, not Gorenstein") {
        auto r = classify_local(sgp({3, 5, 7}));
        CHECK(r.almost_gorenstein == TriState::True);
        CHECK(r.gorenstein == TriState::False);
    }
    SUBCASE("<4,6,11,13>: almost Gorenstein of type 3, not pseudo-Gorenstein") {
        auto r = classify_local(sgp({4, 6, 11, 13}));
        CHECK(r.almost_gorenstein == TriState::True);
        CHECK(r.cm_type == 3);
        CHECK(r.pseudo_gorenstein == TriState::False);
    }
    SUBCASE("<5,7,9>: type 2 but not almost Gorenstein") {
        auto r = classify_local(sgp({5, 7, 9}));
        CHECK(r.almost_gorenstein == TriState::False);
        CHECK(r.cm_type == 2);
        CHECK(r.pseudo_gorenstein == TriState::False);
    }
    SUBCASE("DVR") {
        auto r = classify_local(NumericalSemigroup::naturals());
        CHECK(r.gorenstein == TriState::True);
        CHECK(r.cm_type == 1);
        CHECK(r.multiplicity == 1);
    }
    SUBCASE("a-invariant is the Frobenius number") {
        CHECK(classify_local(sgp({3, 4, 5})).a_invariant == 2);
        CHECK(classify_local(sgp({4, 6, 11, 13})).a_invariant == 9);
    }
}

TEST_CASE("type a-2 family of monomial curves") {
    for (Int a = 4; a <= 8; ++a) {
        for (Int l = 2; l <= 4; ++l) {
            auto r = classify_local(sgp(type_family(a, l)));
            CHECK(r.cm_type == a - 2);
            CHECK(r.almost_gorenstein == TriState::True);
        }
    }
}

TEST_CASE("pseudo-Gorenstein family a+i skipping 2a-2") {
    for (Int a = 4; a <= 9; ++a) {
        auto h = sgp(pg_family(a));
        auto sym = symmetry_class(h);
        CHECK(sym.type == 2);
        CHECK(sym.almost_symmetric());
        CHECK(sym.kind == Kind::PseudoSymmetric);
        auto r = classify_local(h);
        CHECK(r.pseudo_gorenstein == TriState::True);
        // K = R + R t^{a-1}: the canonical ideal is generated by 0 and a-1
        CHECK(canonical_ideal(h).generators() == std::vector<Int>{0, a - 1});
    }
}

TEST_CASE("hilbert coefficients of ideal powers") {
    SUBCASE("<3,4,5> with the shifted canonical ideal") {
        auto h = sgp({3, 4, 5});
        auto e = RelativeIdeal::from_generators(h, {3, 4});
        auto s = hilbert_coeffs(h, e, 10);
        CHECK(s.e0 == 3);
        CHECK(s.e1 == 2);
        CHECK(s.reduction_number == 2);
        REQUIRE(s.colengths.size() >= 4);
        CHECK(std::vector<Int>(s.colengths.begin(), s.colengths.begin() + 4) == std::vector<Int>{2, 4, 7, 10});
    }
    SUBCASE("principal ideal is its own reduction") {
        auto h = sgp({3, 4, 5});
        for (Int m : {3, 4, 6}) {
            auto s = hilbert_coeffs(h, RelativeIdeal::from_generators(h, {m}), 8);
            CHECK(s.e0 == m);
            CHECK(s.e1 == 0);
            CHECK(s.reduction_number == 0);
        }
    }
    SUBCASE("<4,5,7> canonical ideal has e1 = type = 2") {
        auto h = sgp({4, 5, 7});
        auto s = hilbert_coeffs(h, canonical_ideal_shifted(h).ideal, 12);
        CHECK(s.e0 == 4);
        CHECK(s.e1 == 2);
        CHECK(s.reduction_number == 2);
        REQUIRE(s.colengths.size() >= 4);
        CHECK(std::vector<Int>(s.colengths.begin(), s.colengths.begin() + 4) == std::vector<Int>{3, 6, 10, 14});
    }
    SUBCASE("errors") {
        auto h = sgp({3, 4, 5});
        CHECK_THROWS_AS(hilbert_coeffs(h, RelativeIdeal::from_generators(h, {-1, 0}), 10), agr::not_integral);
        CHECK_THROWS_AS(hilbert_coeffs(h, RelativeIdeal::from_generators(h, {1}), 10), agr::not_integral);
        CHECK_THROWS_AS(hilbert_coeffs(h, RelativeIdeal::from_generators(h, {3, 4}), 3), agr::no_stabilization);
        CHECK_THROWS_AS(hilbert_coeffs(h, RelativeIdeal::from_generators(h, {3, 4}), 2), agr::input_error);
    }
    SUBCASE("colength counts match independent set expansion") {
        auto h = sgp({4, 6, 11, 13});
        auto table = oracle::sieve_members({4, 6, 11, 13}, 600);
        auto e = canonical_ideal_shifted(h).ideal;
        auto s = hilbert_coeffs(h, e, 10);
        std::vector<Int> egens = e.generators();
        std::set<Int> power{0};
        for (int n = 0; n <= 6; ++n) {
            // power holds E^n restricted to [0, bound]
            std::set<Int> next;
            for (Int x : power)
                for (Int g : egens)
                    if (x + g <= 500) next.insert(x + g);
            std::set<Int> expanded;
            for (Int x : next)
                for (Int y = x; y <= 500; ++y)
                    if (table[static_cast<size_t>(y - x)]) expanded.insert(y);
            Int cnt = 0;
            for (Int y = 0; y <= 500; ++y)
                if (table[static_cast<size_t>(y)] && !expanded.count(y)) ++cnt;
            CHECK(s.colengths[static_cast<size_t>(n)] == cnt);
            power = std::move(next);
        }
    }
}

TEST_CASE("e1 = type and reduction number 2 on the almost-symmetric non-symmetric family, F <= 10") {
    for (auto mask : oracle::semigroup_masks_up_to(10)) {
        auto h = sgp(oracle::mask_minimal_generators(mask, 10));
        auto sym = symmetry_class(h);
        if (!sym.almost_symmetric() || sym.kind == Kind::Symmetric) continue;
        auto s = hilbert_coeffs(h, canonical_ideal_shifted(h).ideal, 16);
        CHECK(s.e1 == sym.type);
        CHECK(s.reduction_number == 2);
        CHECK(s.e0 == canonical_ideal_shifted(h).shift);
    }
}

TEST_CASE("oversemigroups") {
    SUBCASE("<3,4> has exactly the four from the intermediate-ring list") {
        auto over = oversemigroups(sgp({3, 4}));
        REQUIRE(over.size() == 4);
        CHECK(over[0] == sgp({3, 4}));
        CHECK(over[1] == sgp({3, 4, 5}));
        CHECK(over[2] == sgp({2, 3}));
        CHECK(over[3] == NumericalSemigroup::naturals());
    }
    SUBCASE("<3,5> has exactly five") {
        auto over = oversemigroups(sgp({3, 5}));
        REQUIRE(over.size() == 5);
        CHECK(over[0] == sgp({3, 5}));
        CHECK(over[1] == sgp({3, 5, 7}));
        CHECK(over[2] == sgp({3, 4, 5}));
        CHECK(over[3] == sgp({2, 3}));
        CHECK(over[4] == NumericalSemigroup::naturals());
    }
    SUBCASE("<3,4,5> has exactly three") {
        auto over = oversemigroups(sgp({3, 4, 5}));
        REQUIRE(over.size() == 3);
        CHECK(over[1] == sgp({2, 3}));
    }
    SUBCASE("full monoid") {
        CHECK(oversemigroups(NumericalSemigroup::naturals()).size() == 1);
    }
    SUBCASE("closed under intersection and single-gap completions, F <= 9") {
        for (auto mask : oracle::semigroup_masks_up_to(9)) {
            auto h = sgp(oracle::mask_minimal_generators(mask, 9));
            auto over = oversemigroups(h);
            auto find = [&](const std::vector<Int>& gaps) {
                return std::any_of(over.begin(), over.end(),
                                   [&](const NumericalSemigroup& s) { return s.gaps() == gaps; });
            };
            // genus strictly decreasing within the sorted output, ties broken
            for (size_t i = 0; i + 1 < over.size(); ++i)
                CHECK(over[i].genus() >= over[i + 1].genus());
            // intersection closure
            for (const auto& a : over) {
                for (const auto& b : over) {
                    std::set<Int> gset(a.gaps().begin(), a.gaps().end());
                    for (Int x : b.gaps()) gset.insert(x);
                    CHECK(find(std::vector<Int>(gset.begin(), gset.end())));
                }
            }
            // adding one removable gap stays in the list
            for (Int g : h.gaps()) {
                // H union {g} is closed iff g+g and g+gen land back in it
                bool closed = 2 * g > h.frobenius() || h.contains(2 * g);
                for (Int gen : h.generators())
                    if (g + gen <= h.frobenius() && !h.contains(g + gen)) closed = false;
                if (closed) {
                    std::vector<Int> gaps;
                    for (Int x : h.gaps())
                        if (x != g) gaps.push_back(x);
                    CHECK(find(gaps));
                }
            }
        }
    }
}

TEST_CASE("oversemigroup chains") {
    SUBCASE("multiplicity-2 tower <2,9>") {
        auto res = oversemigroup_chain(sgp({2, 9}));
        REQUIRE(res.is_chain);
        REQUIRE(res.chain.size() == 5);
        CHECK(res.chain[0] == sgp({2, 9}));
        CHECK(res.chain[1] == sgp({2, 7}));
        CHECK(res.chain[2] == sgp({2, 5}));
        CHECK(res.chain[3] == sgp({2, 3}));
        CHECK(res.chain[4] == NumericalSemigroup::naturals());
    }
    SUBCASE("multiplicity-2 towers have length genus + 1") {
        for (Int l = 1; l <= 6; ++l) {
            auto res = oversemigroup_chain(sgp({2, 2 * l + 1}));
            REQUIRE(res.is_chain);
            CHECK(static_cast<Int>(res.chain.size()) == l + 1);
        }
    }
    SUBCASE("<3,4,5> is a chain of length 3") {
        auto res = oversemigroup_chain(sgp({3, 4, 5}));
        REQUIRE(res.is_chain);
        CHECK(res.chain.size() == 3);
    }
    SUBCASE("full monoid is a chain of length 1") {
        auto res = oversemigroup_chain(NumericalSemigroup::naturals());
        REQUIRE(res.is_chain);
        CHECK(res.chain.size() == 1);
    }
    SUBCASE("<4,5,6,7> is not a chain: <2,5> and <3,4,5> are incomparable") {
        auto res = oversemigroup_chain(sgp({4, 5, 6, 7}));
        REQUIRE_FALSE(res.is_chain);
        REQUIRE(res.incomparable.has_value());
        auto [a, b] = *res.incomparable;
        CHECK_FALSE(a.subset_of(b));
        CHECK_FALSE(b.subset_of(a));
        std::set<std::vector<Int>> pair{a.generators(), b.generators()};
        CHECK(pair == std::set<std::vector<Int>>{{2, 5}, {3, 4, 5}});
    }
}
