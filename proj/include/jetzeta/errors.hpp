#pragma once

#include <stdexcept>
#include <string>

namespace jetzeta {

/* Base class for all library errors. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* The generator tuple is not the minimal generator set of a plane-branch
 * semigroup (derived conditions failed). */
struct InvalidSemigroup : Error {
    using Error::Error;
};

/* n_i*gens[i] has no representation sum b_ij*gens[j] with 0 <= b_ij < n_j. */
struct NoRepresentation : Error {
    using Error::Error;
};

/* Random instance search exhausted its retry budget. */
struct GenerationFailed : Error {
    using Error::Error;
};

/* Arguments outside the domain where a formula is defined. */
struct DomainError : Error {
    using Error::Error;
};

/* Series expansion requested for a denominator factor without unit constant
 * term. */
struct NonUnitDenominator : Error {
    using Error::Error;
};

/* Numeric evaluation at a point where a denominator factor vanishes. */
struct PoleHit : Error {
    using Error::Error;
};

/* Field characteristic divides one of the exponents n_i. */
struct BadCharacteristic : Error {
    using Error::Error;
};

/* Enumeration would exceed the configured operation budget. */
struct BudgetExceeded : Error {
    using Error::Error;
};

/* Symbolic residue disagrees with the closed-form residue table. */
struct ResidueMismatch : Error {
    using Error::Error;
};

} // namespace jetzeta
