#ifndef DURFEE_ERRORS_HPP
#define DURFEE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace durfee {

// Base of every failure raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad partitions, bad configuration, bad sample sets.
class validation_error : public error {
public:
    using error::error;
};

// Index outside the computed table.
class range_error : public error {
public:
    using error::error;
};

// Standardization requested for a law with zero variance.
class degenerate_error : public error {
public:
    using error::error;
};

// Fewer observations than unknowns.
class arity_error : public error {
public:
    using error::error;
};

// Rank-deficient least-squares design.
class conditioning_error : public error {
public:
    using error::error;
};

// Operation applied to a fit whose shape it cannot interpret.
class misuse_error : public error {
public:
    using error::error;
};

// Brute-force enumeration requested above the safety bound.
class refusal_error : public error {
public:
    using error::error;
};

// Estimated memory exceeds the configured budget.
class resource_error : public error {
public:
    using error::error;
};

} // namespace durfee

#endif
