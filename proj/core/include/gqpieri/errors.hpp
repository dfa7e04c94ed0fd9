#pragma once

#include <stdexcept>
#include <string>

namespace gqpieri {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgs : Error {
    using Error::Error;
};

// lambda is not contained in mu
struct NotContained : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct EmptyShape : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct NotARim : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct NotUnimodal : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct IndexOutOfRange : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct TooLarge : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

struct ParseError : InvalidArgs {
    using InvalidArgs::InvalidArgs;
};

}  // namespace gqpieri
