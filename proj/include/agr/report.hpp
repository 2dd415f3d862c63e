#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agr/semigroup.hpp"

namespace agr {

enum class TriState { True, False, Unknown };

constexpr TriState tri(bool b) { return b ? TriState::True : TriState::False; }

enum class RingClass { SemigroupRing, StanleyReisner, Veronese };

const char* to_string(RingClass c);
const char* to_string(TriState t);

/// The verdict record shared by all three classifiers.
struct ClassificationReport {
    RingClass kind = RingClass::SemigroupRing;
    std::string input;
    Int krull_dim = 0;
    Int multiplicity = 0;
    Int embedding_dim = 0;
    TriState cohen_macaulay = TriState::Unknown;
    TriState gorenstein = TriState::Unknown;
    TriState almost_gorenstein = TriState::Unknown;
    TriState pseudo_gorenstein = TriState::Unknown;
    TriState level = TriState::Unknown;
    std::optional<Int> cm_type;
    std::optional<Int> a_invariant;
    std::vector<std::string> notes;

    bool operator==(const ClassificationReport&) const = default;
};

/// Structural sanity of a finished report (Gorenstein implies almost
/// Gorenstein, pseudo-Gorenstein implies type <= 2, type 1 iff Gorenstein
/// when both are known). Throws internal_error on violation; every
/// classifier runs its output through this before returning.
void validate(const ClassificationReport& r);

} // namespace agr
