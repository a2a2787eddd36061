#pragma once

// Identify colluders from an observed descendant set.

#include <sscodes/code.hpp>

#include <cstddef>

namespace sscodes
{
    struct TraceResult
    {
        /// Intersection of every subset of `candidates` whose descendant is the observation.
        Coalition guilty;
        /// Codewords inside the observation.
        Coalition candidates;
        /// desc(guilty) reproduces the observation and |guilty| <= t.
        bool certified = false;
        /// Codewords examined by the candidate filter (always M).
        std::size_t visits = 0;
    };

    /// Throws InvalidArgument when no codeword fits the observation and
    /// ResourceLimit when more than `subset_cap` codewords do.
    auto trace(const Code & code, const DescendantSet & observation, std::size_t t, std::size_t subset_cap = 20)
        -> TraceResult;
}
