#pragma once

#include <stdexcept>
#include <string>

namespace stablechar {

// Error taxonomy shared across the library. The CLI maps these onto
// distinct exit codes (parse/regime/resource/verification).

// Malformed or inconsistent input: mismatched ground sizes, bad parses,
// non-covering partitions, invalid diagram paddings.
class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Structurally valid input outside the supported regime (e.g. n < 2k).
class regime_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Desk-scale caps exceeded (ground-set size, tensor space size, dense
// representation dimension).
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity that must hold exactly failed to hold. Always a bug, never
// a data error; surfaced loudly instead of being silently rounded away.
class internal_consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace stablechar
