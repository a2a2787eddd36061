#pragma once

// Exhaustive search for the largest FPC / SC / SSC codes at tiny parameters,
// and canonical forms under coordinate and per-coordinate symbol permutations.

#include <sscodes/code.hpp>
#include <sscodes/verify.hpp>

#include <cstdint>
#include <optional>

namespace sscodes
{
    struct SearchResult
    {
        std::size_t t = 0;
        std::size_t n = 0;
        std::size_t q = 0;
        Property property = Property::SC;
        std::size_t optimum = 0;
        std::optional<Code> witness;
        std::uint64_t nodes_explored = 0;
        /// The search finished: no code of size optimum + 1 exists.
        bool exhaustive = false;
    };

    /// Depth-first extension in lexicographic word order. Every code is
    /// equivalent to one holding the zero word and 1^d 0^(n-d), where d is its
    /// minimum distance, so one subtree per d is searched with all pairwise
    /// distances kept >= d. The best witness is re-checked with the
    /// definitional verifier before it is returned.
    auto search_optimal(std::size_t t, std::size_t n, std::size_t q, Property property,
        std::uint64_t node_budget = 50'000'000) -> SearchResult;

    /// Lexicographically smallest column-sorted matrix (compared row by row)
    /// over all coordinate orders and symbol relabelings.
    auto isomorph_canonical(const Code & code) -> Code;
}
