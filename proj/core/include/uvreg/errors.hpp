#pragma once

#include <stdexcept>
#include <string>

namespace uvreg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    using Error::Error;
};

struct NoSignChange : Error {
    using Error::Error;
};

struct PoleNotBracketed : Error {
    using Error::Error;
};

struct DegeneratePole : Error {
    using Error::Error;
};

} // namespace uvreg
