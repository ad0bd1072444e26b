#pragma once

#include <stdexcept>
#include <string>

namespace pqvrf {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand does not conform to the ring parameters (wrong length, bad value).
struct InvalidInputError : Error {
    using Error::Error;
};

/// Gram-Schmidt hit a (numerically) rank-deficient basis.
struct DegenerateBasisError : Error {
    using Error::Error;
};

/// Trapdoor generation exhausted its retry budget.
struct GenerationFailureError : Error {
    using Error::Error;
};

/// NTRU equation unsolvable for the sampled (f, g); caller resamples.
struct UnsolvableError : Error {
    using Error::Error;
};

/// Sampler width below the Gram-Schmidt floor, or similar parameter misuse.
struct ParameterError : Error {
    using Error::Error;
};

/// Signer identity not present in the ring.
struct MembershipError : Error {
    using Error::Error;
};

/// MAC / binding-tag mismatch on authenticated material.
struct IntegrityError : Error {
    using Error::Error;
};

/// Serialized blob does not parse (bad magic, truncation, version).
struct FormatError : Error {
    using Error::Error;
};

}  // namespace pqvrf
