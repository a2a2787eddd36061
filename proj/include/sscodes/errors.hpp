#pragma once

#include <stdexcept>
#include <string>

namespace sscodes
{
    /// Precondition or argument violation (bad parameters, mismatched fields, ...).
    class InvalidArgument : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Malformed text input (code, cap-set or observation files).
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A configured resource cap (subset enumeration, node budget) was exceeded
    /// and the computation could not complete.
    class ResourceLimit : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// File could not be read or written.
    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
