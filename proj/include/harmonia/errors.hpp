#pragma once

#include <stdexcept>
#include <string>

namespace harmonia {

// Base class for everything this library throws on contract violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// residue ring
struct CompositeModulusBase : Error { using Error::Error; };
struct BadExponent : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };
struct RingMismatch : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct BadRange : Error { using Error::Error; };

// bernoulli
struct DenominatorDivisibleByP : Error { using Error::Error; };
struct BadPrime : Error { using Error::Error; };

// harmonic engine / exact oracle
struct TooLarge : Error { using Error::Error; };
struct PrimeMismatch : Error { using Error::Error; };

// check registry
struct UnknownCheck : Error { using Error::Error; };
struct PrimeTooSmall : Error { using Error::Error; };

} // namespace harmonia
