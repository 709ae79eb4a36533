#pragma once

#include <stdexcept>
#include <string>

namespace dcat {

// Bad arguments from the caller (exit code 1 when reaching the CLI).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computation that cannot produce a trustworthy number (exit code 2).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Bloch chart z_0 != 0 is not valid for this input; the caller must
// handle the state through its closed-form limit instead.
struct chart_error : numerical_error {
    using numerical_error::numerical_error;
};

// The parity-projected state has zero norm; it exists only as a limit.
struct degenerate_cat_error : numerical_error {
    using numerical_error::numerical_error;
};

// Directional large-z limit with a vanishing denominator character sum.
struct indeterminate_direction_error : numerical_error {
    using numerical_error::numerical_error;
};

// A configured size cap was exceeded (exit code 3).
struct cap_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dcat
