#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "agr/report.hpp"
#include "agr/semigroup.hpp"

namespace agr {

/// Canonical ideal K(H) = { x in Z : F(H) - x not in H }, normalized with
/// minimum value 0. Satisfies H <= K <= N with |K \ H| = 2 genus - F - 1.
RelativeIdeal canonical_ideal(const NumericalSemigroup& h);

struct ShiftedCanonicalIdeal {
    RelativeIdeal ideal; ///< integral representative shift + K(H)
    Int shift;           ///< smallest positive multiple of the multiplicity that works
};

/// Integral translate of the canonical ideal used for Hilbert-coefficient
/// runs; e0, e1 and the reduction number are translation-invariant.
ShiftedCanonicalIdeal canonical_ideal_shifted(const NumericalSemigroup& h);

/// The almost-symmetry test (H \ {0}) + K(H) <= H, checked on the minimal
/// generators of H against the finite set K \ H.
bool is_almost_symmetric(const NumericalSemigroup& h);

struct SymmetryClass {
    enum class Kind { Symmetric, PseudoSymmetric, AlmostSymmetricProper, None };
    Kind kind;
    Int type;

    bool almost_symmetric() const { return kind != Kind::None; }
    bool operator==(const SymmetryClass&) const = default;
};

/// Symmetric iff K = H (iff type 1); pseudo-symmetric iff almost symmetric
/// of type 2 (the Frobenius number is then even and F/2 is the second
/// pseudo-Frobenius number); AlmostSymmetricProper for the remaining
/// almost-symmetric semigroups (type >= 3).
SymmetryClass symmetry_class(const NumericalSemigroup& h);

/// d = 1 classification of the semigroup ring k[[t^H]] under
/// infinite-residue-field semantics.
ClassificationReport classify_local(const NumericalSemigroup& h);

struct HilbertSummary {
    Int e0;
    Int e1;
    int reduction_number;
    std::vector<Int> colengths; ///< L(n) = |H \ E^{n+1}| for n = 0..max_n
};

/// Hilbert coefficients of an integral ideal E of H at d = 1: stabilized
/// first difference e0 and e1 = e0 (n+1) - L(n), plus the least r with
/// E^{r+1} = min(E) + E^r. Throws not_integral when E is not contained in
/// H and no_stabilization when max_n is too small.
HilbertSummary hilbert_coeffs(const NumericalSemigroup& h, const RelativeIdeal& e, int max_n);

/// All numerical semigroups containing H, sorted by genus descending
/// (H first, N last). Complete by exhaustive search over gap subsets.
std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& h);

struct OversemigroupChain {
    bool is_chain;
    std::vector<NumericalSemigroup> chain; ///< H up to N when is_chain
    std::optional<std::pair<NumericalSemigroup, NumericalSemigroup>> incomparable;
};

/// The oversemigroup poset as a chain when it is totally ordered by
/// inclusion, otherwise the first incomparable pair. NotAChain is a value,
/// not an error.
OversemigroupChain oversemigroup_chain(const NumericalSemigroup& h);

} // namespace agr
