#pragma once

#include "agr/report.hpp"
#include "agr/simplicial.hpp"

namespace agr {

/// The n-th Veronese subring of a polynomial ring in d variables.
struct VeroneseInstance {
    Int d; ///< number of variables = Krull dimension
    Int n; ///< Veronese order
};

/// Hilbert numerator of R^(n), extracted by d-fold finite differencing of
/// dim (R^(n))_m = C(mn + d - 1, d - 1). The result reproduces the
/// dimension series exactly (checked internally).
HilbertNumerator veronese_h_numerator(const VeroneseInstance& v);

/// Closed-form a-invariant a(R^(n)) = -ceil(d/n).
Int a_invariant_veronese(const VeroneseInstance& v);

/// The two routes to the a-invariant and multiplicity must agree; any
/// disagreement is an internal_error, never a silent preference.
void check_veronese_consistency(const VeroneseInstance& v, const HilbertNumerator& h, Int closed_form_a);

/// Closed-form classification: Gorenstein iff n | d (or d = 1, where the
/// Veronese is again a polynomial ring); almost Gorenstein iff d <= 2,
/// n | d, or (d, n) = (3, 2). Cross-validated against the Hilbert engine.
ClassificationReport classify_veronese(const VeroneseInstance& v);

} // namespace agr
