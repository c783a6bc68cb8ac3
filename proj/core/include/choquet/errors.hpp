#pragma once

#include <stdexcept>
#include <string>

namespace choquet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidPermutation : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct SubsetLimitExceeded : Error { using Error::Error; };
struct DegenerateSet : Error { using Error::Error; };
struct SingularGram : Error { using Error::Error; };
struct BoundViolation : Error { using Error::Error; };
struct ZeroTrace : Error { using Error::Error; };
struct MaximalityViolation : Error { using Error::Error; };
struct DifferentClass : Error { using Error::Error; };
struct BoundaryInput : Error { using Error::Error; };
struct InconsistentSystem : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace choquet
