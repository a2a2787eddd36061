#pragma once

// Cap sets in the affine space F_{q1}^n: point sets with no three collinear.

#include <sscodes/field.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sscodes
{
    struct CapSet
    {
        GaloisField base;
        std::size_t dim = 0;
        std::vector<VectorElement> points;
        /// Where the points came from: "greedy-canonical", "greedy-parabola",
        /// "greedy-random", "exact", "file", ...
        std::string source;
        /// True when the size is certified maximum.
        bool optimal = false;
    };

    /// Whether z - x is a scalar multiple of y - x. Throws on repeated points or
    /// mismatched dimensions.
    auto collinear(const GaloisField & base, const VectorElement & x, const VectorElement & y, const VectorElement & z)
        -> bool;

    /// First collinear triple of distinct points (in index order), if any.
    auto find_collinear_triple(const CapSet & cap) -> std::optional<std::array<std::size_t, 3>>;

    enum class GreedyOrder
    {
        Canonical,
        /// (i, i^2) points first, then the rest canonically; dimension 2 only.
        Parabola,
        /// Shuffled with a seeded mt19937_64.
        Random
    };

    auto capset_greedy(const GaloisField & base, std::size_t dim, GreedyOrder order = GreedyOrder::Canonical,
        std::uint64_t seed = 0) -> CapSet;

    /// Maximum cap by backtracking. The first points are pinned to 0, e1, e2
    /// (any cap of size >= 3 maps onto such a cap under an affine map). When the
    /// node budget runs out the best cap found is returned with optimal = false.
    auto capset_exact(const GaloisField & base, std::size_t dim, std::uint64_t node_budget = 50'000'000) -> CapSet;

    /// Cap file: "q1 n k" header, then k lines of n integers.
    auto parse_cap(std::string_view text) -> CapSet;
    auto serialize_cap(const CapSet & cap) -> std::string;
}
