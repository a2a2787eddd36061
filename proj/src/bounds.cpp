#include <sscodes/bounds.hpp>
#include <sscodes/errors.hpp>
#include <sscodes/field.hpp>

#include <algorithm>
#include <cmath>

namespace sscodes
{
    namespace
    {
        auto checked_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t
        {
            std::uint64_t r = 0;
            if (__builtin_mul_overflow(a, b, &r))
                throw ResourceLimit("bound value exceeds the 64-bit range");
            return r;
        }

        auto checked_add(std::uint64_t a, std::uint64_t b) -> std::uint64_t
        {
            std::uint64_t r = 0;
            if (__builtin_add_overflow(a, b, &r))
                throw ResourceLimit("bound value exceeds the 64-bit range");
            return r;
        }

        auto checked_pow(std::uint64_t base, std::uint64_t e) -> std::uint64_t
        {
            std::uint64_t r = 1;
            for (std::uint64_t i = 0; i < e; ++i)
                r = checked_mul(r, base);
            return r;
        }

        auto is_prime_power(std::uint64_t k) -> bool
        {
            if (k < 2)
                return false;
            for (std::uint64_t p = 2; p * p <= k; ++p)
                if (k % p == 0) {
                    while (k % p == 0)
                        k /= p;
                    return k == 1;
                }
            return true;
        }

        // Integer r with r^e = x, if any.
        auto exact_root(std::uint64_t x, unsigned e) -> std::optional<std::uint64_t>
        {
            std::uint64_t lo = 0, hi = 1;
            while (true) {
                std::uint64_t p = 1;
                bool over = false;
                for (unsigned i = 0; i < e && ! over; ++i)
                    over = __builtin_mul_overflow(p, hi, &p) || p > x;
                if (over)
                    break;
                lo = hi;
                hi *= 2;
            }
            while (lo + 1 < hi) {
                const auto mid = lo + (hi - lo) / 2;
                std::uint64_t p = 1;
                bool over = false;
                for (unsigned i = 0; i < e && ! over; ++i)
                    over = __builtin_mul_overflow(p, mid, &p) || p > x;
                (over ? hi : lo) = mid;
            }
            std::uint64_t p = 1;
            for (unsigned i = 0; i < e; ++i)
                p *= lo;
            if (p == x)
                return lo;
            return std::nullopt;
        }
    }

    auto isqrt(std::uint64_t x) -> std::uint64_t
    {
        if (x < 2)
            return x;
        auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
        while (r > 0 && (r > x / r))
            --r;
        while ((r + 1) <= x / (r + 1))
            ++r;
        return r;
    }

    auto bound_sc_upper(std::size_t t, std::size_t n, std::uint64_t q) -> std::uint64_t
    {
        if (t < 3 || n < 2)
            throw InvalidArgument("the general separable-code bound needs t >= 3 and n >= 2");
        if (q < 2)
            throw InvalidArgument("alphabet size q must be at least 2");
        const std::uint64_t d = t - 1;
        const std::uint64_t r = n % d;
        const std::uint64_t hi = checked_pow(q, (n + d - 1) / d);
        const std::uint64_t lo = checked_pow(q, n / d);
        const auto mixed = checked_add(checked_mul(r, hi - 1), checked_mul(d - r, lo - 1));
        return std::max(hi, mixed);
    }

    auto bound_2sc_length_n(std::size_t n, std::uint64_t q) -> std::uint64_t
    {
        if (n < 1 || q < 2)
            throw InvalidArgument("need n >= 1 and q >= 2");
        const auto main = checked_pow(q, (2 * n + 2) / 3);
        const auto p = checked_pow(q, n / 3);
        return checked_add(main, checked_mul(p, p - 1) / 2);
    }

    auto bound_22(std::uint64_t q) -> Bound22
    {
        if (q < 2)
            throw InvalidArgument("need q >= 2");
        if (q > (std::uint64_t{1} << 40))
            throw ResourceLimit("q too large for exact evaluation");
        Bound22 b;
        const auto k = (1 + isqrt(4 * q - 3)) / 2;
        b.k = k;
        const auto k2 = k * k;
        if (q <= k2 - 1) {
            b.t = 0;
        }
        else if (q == k2) {
            const auto a = static_cast<std::int64_t>(3 * k2 + k - 1);
            const auto big = 5 * k2 * k2 + 6 * k2 * k - k2 - 2 * k + 1;
            const auto root = isqrt(big);
            // floor((a - sqrt(big)) / 2) = floor(floor(a - sqrt(big)) / 2)
            const auto ceil_root = static_cast<std::int64_t>(root * root == big ? root : root + 1);
            const auto floor_diff = a - ceil_root;
            b.t = static_cast<std::uint64_t>(floor_diff >= 0 ? floor_diff / 2 : -((-floor_diff + 1) / 2));
        }
        else if (q <= k2 + k - 2) {
            b.t = (k - 1) * q / ((k + 1) * (k + 1) - (q + 1));
        }
        else if (q == k2 + k - 1) {
            b.t = k2 - k;
        }
        else {
            b.t = k2;
        }
        b.value = checked_add(checked_mul(q, k), b.t);

        // Attained when q = j^2 - 1, j^2 + j - 2, j^2 + j - 1, j^2 + j or
        // j^2 + j + 1 for a prime power j >= 2. For the first four j equals k;
        // j^2 + j + 1 has k = j + 1.
        const bool near_square = (q == k2 - 1 || q == k2 + k - 2 || q == k2 + k - 1 || q == k2 + k) && is_prime_power(k);
        const bool projective = k >= 3 && q == (k - 1) * (k - 1) + k && is_prime_power(k - 1);
        b.exact = near_square || projective;
        return b;
    }

    auto bound_small_n(std::size_t t, std::size_t n, std::uint64_t q) -> SmallLengthBound
    {
        if (n < 2)
            throw InvalidArgument("length n must be at least 2");
        if (n > t)
            throw InvalidArgument("the small-length bound needs n <= t");
        if (q < 2)
            throw InvalidArgument("alphabet size q must be at least 2");
        if (n < t)
            return {checked_mul(n, q - 1), true};
        return {n <= q ? checked_mul(q, q) : checked_mul(n, q), false};
    }

    auto bound_33(std::uint64_t q) -> Bound33
    {
        if (q < 4)
            throw InvalidArgument("the length-3 three-coalition bounds need q >= 4");
        Bound33 b;
        const auto s = isqrt(q);
        b.lower = checked_pow(s, 3);
        b.upper = checked_mul(3, checked_mul(q, q)) / 4;
        if (auto q1 = exact_root(q, 6); q1 && *q1 % 6 == 1 && is_prime_power(*q1))
            b.asymptotic = "M = Omega(q^(5/3) + q^(4/3) - q) via caps in F_" + std::to_string(*q1)
                + "^6 (no constant known)";
        return b;
    }

    auto to_string(BoundKind kind) -> std::string
    {
        switch (kind) {
            case BoundKind::Lower: return "lower";
            case BoundKind::Upper: return "upper";
            case BoundKind::Exact: return "exact";
        }
        return "?";
    }

    auto bound_report(std::size_t t, std::size_t n, std::uint64_t q, std::optional<std::uint64_t> certified_size)
        -> BoundReport
    {
        if (t < 1 || n < 1 || q < 2)
            throw InvalidArgument("need t >= 1, n >= 1 and q >= 2");
        BoundReport report{t, n, q, std::nullopt, std::nullopt, {}, {}};
        auto add = [&](std::string source, BoundKind kind, std::uint64_t value, std::string note, bool conditional = false) {
            report.all.push_back(BoundEntry{std::move(source), kind, value, std::move(note), conditional});
        };

        add("repetition-code", BoundKind::Lower, q, "the q constant words form a strongly separable code");
        if (n == 1)
            add("length-one", BoundKind::Exact, q, "a length-1 code has at most q words");
        if (t == 1)
            add("trivial-t1", BoundKind::Exact, checked_pow(q, n), "every code is 1-separable");

        if (t >= 3 && n >= 2) {
            const auto v = bound_sc_upper(t, n, q);
            add("sc-upper-general", BoundKind::Upper, v, "valid when M > q", true);
            add("sc-upper-general", BoundKind::Upper, std::max(q, v), "max(q, conditional value): holds unconditionally");
        }
        if (t == 2)
            add("2sc-length-n", BoundKind::Upper, bound_2sc_length_n(n, q), "");
        if (t == 2 && n == 2) {
            const auto b = bound_22(q);
            const auto note = "k = " + std::to_string(b.k) + ", t = " + std::to_string(b.t);
            add("2sc-length-2", b.exact ? BoundKind::Exact : BoundKind::Upper, b.value, note);
        }
        if (n >= 2 && n < t) {
            const auto b = bound_small_n(t, n, q);
            add("small-length-exact", BoundKind::Exact, b.value, "n < t");
        }
        if (n >= 2 && n == t) {
            const auto b = bound_small_n(t, n, q);
            add("length-equals-t", BoundKind::Upper, b.value, n <= q ? "n <= q: q^2" : "n > q: n q");
        }
        if (t == 3 && n == 3 && q >= 4) {
            const auto b = bound_33(q);
            add("3sc-length3-upper", BoundKind::Upper, b.upper, "floor(3 q^2 / 4)");
            add("3sc-length3-lower", BoundKind::Lower, b.lower, "floor(sqrt q)^3");
            if (b.asymptotic)
                report.annotations.push_back(*b.asymptotic);
        }
        if (certified_size)
            add("certified-construction", BoundKind::Lower, *certified_size, "size of a verified construction");

        for (const auto & e : report.all) {
            if (e.conditional)
                continue;
            if (e.kind != BoundKind::Upper && (! report.best_lower || e.value > report.best_lower->value))
                report.best_lower = e;
            if (e.kind != BoundKind::Lower && (! report.best_upper || e.value < report.best_upper->value))
                report.best_upper = e;
        }
        return report;
    }
}
