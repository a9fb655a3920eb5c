#pragma once

#include <stdexcept>

namespace raman {

/// Parameter or state outside the model's domain of validity (nonphysical
/// inputs, unsupported correlator orders, broken low-intensity assumptions).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Filesystem or stream failure while reading tabulated data or writing output.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace raman
