#ifndef ZETAFORGE_ERRORS_HPP
#define ZETAFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetaforge {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (graph file, catalog file, generator spec).
class parse_error : public error {
public:
    using error::error;
};

/// An operation was called outside its precondition (wrong graph class, bad size).
class precondition_error : public error {
public:
    using error::error;
};

/// Exact division left a remainder.
class divisibility_error : public error {
public:
    using error::error;
};

/// Root finder failed to converge or a residual check failed.
class numerical_error : public error {
public:
    using error::error;
};

/// Prime census consistency failure (non-integral or negative class counts).
class inconsistency_error : public error {
public:
    using error::error;
};

} // namespace zetaforge

#endif // ZETAFORGE_ERRORS_HPP
