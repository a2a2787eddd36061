#pragma once

// Closed-form bounds on M(t, n, q), the largest size of a strongly t-separable
// (n, M, q) code. Everything is evaluated in exact integer arithmetic; values
// that do not fit in 64 bits raise ResourceLimit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sscodes
{
    /// floor(sqrt(x)), exact.
    auto isqrt(std::uint64_t x) -> std::uint64_t;

    /// Upper bound for t >= 3, n >= 2, valid whenever M(t, n, q) > q.
    auto bound_sc_upper(std::size_t t, std::size_t n, std::uint64_t q) -> std::uint64_t;

    /// Upper bound on M(2, n, q).
    auto bound_2sc_length_n(std::size_t n, std::uint64_t q) -> std::uint64_t;

    struct Bound22
    {
        std::uint64_t value = 0;
        std::uint64_t k = 0;
        std::uint64_t t = 0;
        /// The bound is attained (q sits in one of the known optimal families).
        bool exact = false;
    };

    /// Upper bound q k + t on M(2, 2, q).
    auto bound_22(std::uint64_t q) -> Bound22;

    struct SmallLengthBound
    {
        std::uint64_t value = 0;
        /// n < t: the value is the optimum; n = t: an upper bound only.
        bool exact = false;
    };

    /// 2 <= n <= t.
    auto bound_small_n(std::size_t t, std::size_t n, std::uint64_t q) -> SmallLengthBound;

    struct Bound33
    {
        std::uint64_t lower = 0;
        std::uint64_t upper = 0;
        /// Set when q = q1^6 with q1 = 1 (mod 6) a prime power.
        std::optional<std::string> asymptotic;
    };

    /// floor(sqrt q)^3 <= M(3, 3, q) <= floor(3 q^2 / 4), q >= 4.
    auto bound_33(std::uint64_t q) -> Bound33;

    enum class BoundKind
    {
        Lower,
        Upper,
        Exact
    };

    auto to_string(BoundKind kind) -> std::string;

    struct BoundEntry
    {
        std::string source;
        BoundKind kind = BoundKind::Upper;
        std::uint64_t value = 0;
        std::string note;
        /// Holds only under a hypothesis on M itself (see note); never selected as best.
        bool conditional = false;
    };

    struct BoundReport
    {
        std::size_t t = 0;
        std::size_t n = 0;
        std::uint64_t q = 0;
        std::optional<BoundEntry> best_lower;
        std::optional<BoundEntry> best_upper;
        std::vector<BoundEntry> all;
        std::vector<std::string> annotations;
    };

    /// Every bound that applies to (t, n, q), tightest ones selected. A size
    /// achieved by a verified construction may be passed in as a lower bound.
    auto bound_report(std::size_t t, std::size_t n, std::uint64_t q,
        std::optional<std::uint64_t> certified_size = std::nullopt) -> BoundReport;
}
