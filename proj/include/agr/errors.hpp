#pragma once

#include <stdexcept>
#include <string>

namespace agr {

/// Base for all rejected-input conditions. The CLI maps these to exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_numerical : input_error {
    using input_error::input_error;
};

struct not_member : input_error {
    using input_error::input_error;
};

struct mixed_base : input_error {
    using input_error::input_error;
};

struct not_contained : input_error {
    using input_error::input_error;
};

struct not_integral : input_error {
    using input_error::input_error;
};

struct no_stabilization : input_error {
    using input_error::input_error;
};

struct empty_complex : input_error {
    using input_error::input_error;
};

struct vertex_out_of_range : input_error {
    using input_error::input_error;
};

struct ghost_vertex : input_error {
    using input_error::input_error;
};

struct not_prime : input_error {
    using input_error::input_error;
};

/// Cross-check failure between two independent computations of the same
/// quantity (closed form vs Hilbert engine, h-vector identity vs Reisner).
/// Never an input problem. The CLI maps this to exit code 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace agr
