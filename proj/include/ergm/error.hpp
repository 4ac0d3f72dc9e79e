#pragma once

#include <stdexcept>
#include <string>

namespace ergm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: out-of-range vertex, self-loop, length mismatch, unsupported p.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// An enumeration guard (vertex count, hypergraph count, cluster count) was hit.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace ergm
