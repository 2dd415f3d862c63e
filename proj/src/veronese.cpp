#include "agr/veronese.hpp"

#include <string>

namespace agr {

namespace {

void validate_instance(const VeroneseInstance& v) {
    if (v.d < 1 || v.n < 1) throw input_error("veronese: d and n must be positive");
    if (v.d > 16 || v.n > 16) throw input_error("veronese: grid capped at d, n <= 16 for exact arithmetic");
}

Int checked_binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > INT64_MAX) throw input_error("veronese: binomial exceeds 64-bit range");
    }
    return static_cast<Int>(r);
}

Int dimension_at(const VeroneseInstance& v, Int m) {
    return checked_binomial(m * v.n + v.d - 1, v.d - 1);
}

std::string instance_string(const VeroneseInstance& v) {
    return "d=" + std::to_string(v.d) + ",n=" + std::to_string(v.n);
}

} // namespace

HilbertNumerator veronese_h_numerator(const VeroneseInstance& v) {
    validate_instance(v);
    const Int d = v.d;
    std::vector<Int> dims;
    for (Int m = 0; m <= d + 2; ++m) dims.push_back(dimension_at(v, m));

    // F(lambda) = (1 - lambda)^d * sum dims_m lambda^m, degree < d
    std::vector<Int> h(static_cast<size_t>(d) + 3, 0);
    for (Int j = 0; j < static_cast<Int>(h.size()); ++j) {
        Int acc = 0;
        for (Int i = 0; i <= std::min(j, d); ++i)
            acc += (i % 2 ? -1 : 1) * checked_binomial(d, i) * dims[static_cast<size_t>(j - i)];
        h[static_cast<size_t>(j)] = acc;
    }
    for (Int j = d; j < static_cast<Int>(h.size()); ++j)
        if (h[static_cast<size_t>(j)] != 0)
            throw internal_error("veronese numerator failed to terminate below the dimension");
    while (h.size() > 1 && h.back() == 0) h.pop_back();

    HilbertNumerator num{std::move(h), d};
    // the numerator must reproduce the dimension series it came from
    for (Int m = 0; m <= d + 2; ++m) {
        Int from_h = 0;
        for (Int j = 0; j < static_cast<Int>(num.coeffs.size()); ++j)
            from_h += num.coeffs[static_cast<size_t>(j)] * checked_binomial(m - j + d - 1, d - 1);
        if (from_h != dims[static_cast<size_t>(m)])
            throw internal_error("veronese numerator does not reproduce the dimension series");
    }
    return num;
}

Int a_invariant_veronese(const VeroneseInstance& v) {
    validate_instance(v);
    return -((v.d + v.n - 1) / v.n); // -ceil(d/n)
}

void check_veronese_consistency(const VeroneseInstance& v, const HilbertNumerator& h, Int closed_form_a) {
    if (h.a_invariant() != closed_form_a)
        throw internal_error("veronese a-invariant mismatch on " + instance_string(v) + ": closed form "
                             + std::to_string(closed_form_a) + " vs numerator "
                             + std::to_string(h.a_invariant()));
    Int power = 1;
    for (Int i = 1; i < v.d; ++i) power *= v.n;
    if (h.multiplicity() != power)
        throw internal_error("veronese multiplicity mismatch on " + instance_string(v) + ": n^(d-1) = "
                             + std::to_string(power) + " vs numerator sum "
                             + std::to_string(h.multiplicity()));
}

ClassificationReport classify_veronese(const VeroneseInstance& v) {
    validate_instance(v);
    const Int d = v.d, n = v.n;

    auto h = veronese_h_numerator(v);
    const Int a = a_invariant_veronese(v);
    check_veronese_consistency(v, h, a);

    // d = 1 sits outside the n | d rule: k[x^n] regraded is a polynomial ring
    const bool gorenstein = d % n == 0 || d == 1;
    const bool almost = d <= 2 || d % n == 0 || (d == 3 && n == 2);

    ClassificationReport r;
    r.kind = RingClass::Veronese;
    r.input = instance_string(v);
    r.krull_dim = d;
    r.multiplicity = h.multiplicity();
    r.embedding_dim = checked_binomial(n + d - 1, d - 1);
    r.cohen_macaulay = TriState::True;
    r.a_invariant = a;
    r.gorenstein = tri(gorenstein);
    r.almost_gorenstein = tri(almost);

    if (gorenstein) {
        r.cm_type = 1;
        r.notes.push_back(d == 1 ? "d = 1: the Veronese of one variable is a polynomial ring"
                                 : "n divides d: Gorenstein");
    } else if (a == 1 - d) {
        // level ring generated in one degree; type is the numerator slope
        r.cm_type = h.coeffs.size() > 1 ? h.coeffs[1] : 1;
        r.notes.push_back(d <= 2 ? "d = 2: Veronese subrings of 2-dim reduced rings are almost Gorenstein"
                                 : "(d,n) = (3,2): level window -n(d-1) < -d < -n(d-2)");
    } else {
        r.notes.push_back("d >= 3 with n not dividing d and (d,n) != (3,2): not almost Gorenstein");
    }
    r.level = a == 1 - d ? TriState::True : TriState::Unknown;
    if (r.cm_type)
        r.pseudo_gorenstein = tri(almost && *r.cm_type <= 2);
    else
        r.pseudo_gorenstein = tri(false); // not almost Gorenstein here

    r.notes.push_back("a-invariant cross-checked: closed form -ceil(d/n) = Hilbert numerator degree - d");

    validate(r);
    return r;
}

} // namespace agr
