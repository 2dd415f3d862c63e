#include "agr/report.hpp"

#include "agr/errors.hpp"

namespace agr {

const char* to_string(RingClass c) {
    switch (c) {
        case RingClass::SemigroupRing: return "semigroup-ring";
        case RingClass::StanleyReisner: return "stanley-reisner";
        case RingClass::Veronese: return "veronese";
    }
    return "?";
}

const char* to_string(TriState t) {
    switch (t) {
        case TriState::True: return "true";
        case TriState::False: return "false";
        case TriState::Unknown: return "unknown";
    }
    return "?";
}

void validate(const ClassificationReport& r) {
    auto fail = [&](const char* what) {
        throw internal_error(std::string("report invariant violated: ") + what + " (input " + r.input + ")");
    };
    if (r.gorenstein == TriState::True && r.almost_gorenstein == TriState::False)
        fail("gorenstein without almost_gorenstein");
    if (r.pseudo_gorenstein == TriState::True) {
        if (r.almost_gorenstein == TriState::False) fail("pseudo_gorenstein without almost_gorenstein");
        if (r.cm_type && *r.cm_type > 2) fail("pseudo_gorenstein with type > 2");
    }
    if (r.cm_type && r.gorenstein != TriState::Unknown) {
        if ((*r.cm_type == 1) != (r.gorenstein == TriState::True))
            fail("type 1 must coincide with gorenstein");
    }
    if (r.krull_dim < 0 || r.multiplicity < 0) fail("negative dimension data");
}

} // namespace agr
