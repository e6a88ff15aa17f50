#pragma once

#include <stdexcept>
#include <string>

namespace shicores {

// Vector, point or root used with an object of a different rank.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation defined only on n-cores was handed something else.
class NotACore : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A bounded brute-force search did not stabilise at the requested radius.
class RadiusTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check of an oracle failed.
class OracleFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace shicores
