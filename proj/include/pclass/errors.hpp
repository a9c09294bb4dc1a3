#pragma once

#include <stdexcept>
#include <string>

namespace pclass {

/** Base class for all failures raised by this library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Input text could not be parsed. */
struct ParseError : Error {
    using Error::Error;
};

/** A requested built-in complex name is not known. */
struct UnknownBuiltin : Error {
    using Error::Error;
};

/** A bistellar move was applied where its preconditions fail. */
struct NotApplicable : Error {
    using Error::Error;
};

/** induce_chain was asked about a vertex that never participates. */
struct VertexNeverPresent : Error {
    using Error::Error;
};

/** class_coefficient on a homology group whose rank is not 1. */
struct RankMismatch : Error {
    using Error::Error;
};

/** evaluate_elementary on a malformed kind tag. */
struct UnknownKind : Error {
    using Error::Error;
};

/** Sphere simplification exceeded its move budget. */
struct ReductionStalled : Error {
    using Error::Error;
};

/** A graph cycle could not be decomposed into elementary cycles, or the
 *  certificate check failed.  Carries a diagnostic dump.  */
struct DecompositionFailed : Error {
    using Error::Error;
};

/** A chain expected to be a cycle has nonzero boundary. */
struct NotACycle : Error {
    using Error::Error;
};

/** Internal invariant violation (a bug, not a user error). */
struct InternalError : Error {
    using Error::Error;
};

/** Always-on invariant check; throws InternalError with context. */
#define PCLASS_CHECK(cond, msg)                                         \
    do {                                                                \
        if (!(cond))                                                    \
            throw ::pclass::InternalError(std::string("invariant: ") + \
                                          (msg) + " [" #cond "]");      \
    } while (0)

}  // namespace pclass
