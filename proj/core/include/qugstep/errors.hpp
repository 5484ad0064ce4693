#pragma once

#include <stdexcept>
#include <string>

namespace qugstep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (Pauli labels, Hamiltonian files).
struct ParseError : Error {
    using Error::Error;
};

// A value violates a precondition (dimension mismatch, h <= 0, t > T, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Shot budget cannot be realized (fewer shots than measurement groups).
struct BudgetError : Error {
    using Error::Error;
};

// The operation is not defined for this input (unsupported gate generator,
// multi-parameter ansatz where a single rotation is required).
struct CapabilityError : Error {
    using Error::Error;
};

// Bad or missing run configuration (unknown keys, absent data files).
struct ConfigError : Error {
    using Error::Error;
};

// A computation produced a non-finite value.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace qugstep
