#ifndef MALT_ERRORS_HPP
#define MALT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace malt {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix/algebra dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// Malformed algebra data (bad tensor shape, unparsable coefficient, ...).
/// The message always names the offending location.
struct FormatError : Error {
    using Error::Error;
};

/// A linearly dependent matrix family was passed where a unique
/// coefficient expression is required. Distinct from "not in span",
/// which is an ordinary outcome, not an error.
struct DependentFamilyError : Error {
    using Error::Error;
};

/// Structural precondition on an algebra failed (missing unit,
/// non-closed subspace, ...).
struct AlgebraError : Error {
    using Error::Error;
};

} // namespace malt

#endif
