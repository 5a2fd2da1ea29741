#pragma once

#include <stdexcept>
#include <string>

namespace symwsc {

/// Parameters are infeasible for the requested construction (CLI exit 1).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An artifact failed a structural validation (CLI exit 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range parameters, bad payloads, bad orders (CLI exit 3).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// 1-based modular reduction: maps any integer into 1..n (0 maps to n).
inline int reduce1(long long v, int n) {
    long long r = (v - 1) % n;
    if (r < 0) r += n;
    return static_cast<int>(r + 1);
}

} // namespace symwsc
