// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace ftcut {

// Bad input: malformed files, violated preconditions, exceeded enumeration caps.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical routine broke down (simplex pivot breakdown, collapsed ellipsoid,
// contract breach detected at runtime). Never silently clamped.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ftcut
