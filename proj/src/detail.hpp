#pragma once

// Internal helpers shared by the verifiers, tracing and search.

#include <sscodes/code.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

namespace sscodes::detail
{
    /// Codewords as per-coordinate bitmasks over the symbols actually used in
    /// that coordinate (ranked), W words per coordinate. Descendant sets of
    /// coalitions are then ORs of columns and compare with memcmp.
    class PackedCode
    {
    public:
        explicit PackedCode(const Code & code) :
            n_(code.length()),
            m_(code.size()),
            ranks_(code.length())
        {
            std::size_t widest = 1;
            for (std::size_t i = 0; i < n_; ++i) {
                auto & r = ranks_[i];
                for (std::size_t j = 0; j < m_; ++j)
                    r.push_back(code.at(i, j));
                std::sort(r.begin(), r.end());
                r.erase(std::unique(r.begin(), r.end()), r.end());
                widest = std::max(widest, r.size());
            }
            w_ = (widest + 63) / 64;
            bits_.assign(m_ * n_ * w_, 0);
            for (std::size_t j = 0; j < m_; ++j)
                for (std::size_t i = 0; i < n_; ++i) {
                    const auto rank = rank_of(i, code.at(i, j));
                    bits_[(j * n_ + i) * w_ + rank / 64] |= std::uint64_t{1} << (rank % 64);
                }
        }

        auto words() const -> std::size_t { return n_ * w_; }
        auto size() const -> std::size_t { return m_; }

        auto column(std::size_t j) const -> std::span<const std::uint64_t> { return {bits_.data() + j * words(), words()}; }

        auto add(std::span<std::uint64_t> acc, std::size_t j) const -> void
        {
            const auto col = column(j);
            for (std::size_t k = 0; k < acc.size(); ++k)
                acc[k] |= col[k];
        }

        auto covers(std::span<const std::uint64_t> acc, std::size_t j) const -> bool
        {
            const auto col = column(j);
            for (std::size_t k = 0; k < acc.size(); ++k)
                if ((col[k] & ~acc[k]) != 0)
                    return false;
            return true;
        }

        auto descendant_of(std::span<const std::uint32_t> members) const -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> acc(words(), 0);
            for (auto c : members)
                add(acc, c);
            return acc;
        }

        /// Packed form of an arbitrary observation; symbols no codeword uses in
        /// a coordinate are reported through `unmatched`.
        auto pack(const DescendantSet & d, bool & unmatched) const -> std::vector<std::uint64_t>
        {
            unmatched = false;
            std::vector<std::uint64_t> acc(words(), 0);
            for (std::size_t i = 0; i < n_; ++i)
                for (auto s : d.at(i).values()) {
                    auto pos = std::lower_bound(ranks_[i].begin(), ranks_[i].end(), s);
                    if (pos == ranks_[i].end() || *pos != s) {
                        unmatched = true;
                        continue;
                    }
                    const auto rank = static_cast<std::size_t>(pos - ranks_[i].begin());
                    acc[i * w_ + rank / 64] |= std::uint64_t{1} << (rank % 64);
                }
            return acc;
        }

    private:
        auto rank_of(std::size_t i, Symbol s) const -> std::size_t
        {
            return static_cast<std::size_t>(std::lower_bound(ranks_[i].begin(), ranks_[i].end(), s) - ranks_[i].begin());
        }

        std::size_t n_, m_, w_ = 1;
        std::vector<std::vector<Symbol>> ranks_;
        std::vector<std::uint64_t> bits_;
    };

    // Intersection of all subsets of `candidates` whose packed descendant
    // equals `target`, as a bitmask over candidate positions (0 if none).
    inline auto subset_intersection(const detail::PackedCode & packed, const std::vector<std::uint32_t> & candidates,
        std::span<const std::uint64_t> target) -> std::uint64_t
    {
        const std::size_t d = candidates.size();
        const std::size_t words = packed.words();
        const std::size_t lo = d / 2, hi = d - lo;

        auto build = [&](std::size_t offset, std::size_t count) {
            std::vector<std::uint64_t> table((std::size_t{1} << count) * words, 0);
            for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(mask));
                const auto prev = mask & (mask - 1);
                const auto col = packed.column(candidates[offset + bit]);
                for (std::size_t k = 0; k < words; ++k)
                    table[mask * words + k] = table[prev * words + k] | col[k];
            }
            return table;
        };
        const auto low = build(0, lo);
        const auto high = build(lo, hi);

        std::uint64_t inter = ~std::uint64_t{0};
        bool any = false;
        for (std::size_t mh = 0; mh < (std::size_t{1} << hi); ++mh)
            for (std::size_t ml = 0; ml < (std::size_t{1} << lo); ++ml) {
                if (mh == 0 && ml == 0)
                    continue;
                bool equal = true;
                for (std::size_t k = 0; k < words && equal; ++k)
                    equal = (low[ml * words + k] | high[mh * words + k]) == target[k];
                if (equal) {
                    inter &= (std::uint64_t{mh} << lo) | ml;
                    any = true;
                }
            }
        return any ? inter : 0;
    }

    /// Visits every k-subset of [0, m) whose smallest element is `first`, in
    /// lexicographic order. Stops early when `f` returns false; returns false
    /// in that case.
    template <typename F>
    auto for_each_combination_from(std::size_t m, std::size_t k, std::uint32_t first, F && f) -> bool
    {
        if (k == 0 || first + k > m)
            return true;
        std::vector<std::uint32_t> idx(k);
        idx[0] = first;
        for (std::size_t i = 1; i < k; ++i)
            idx[i] = first + static_cast<std::uint32_t>(i);
        while (true) {
            if (! f(std::span<const std::uint32_t>{idx}))
                return false;
            // advance positions 1..k-1 only; position p tops out at m - k + p
            std::size_t pos = k - 1;
            while (pos >= 1 && idx[pos] == m - k + pos)
                --pos;
            if (pos == 0)
                return true;
            ++idx[pos];
            for (std::size_t r = pos + 1; r < k; ++r)
                idx[r] = idx[r - 1] + 1;
        }
    }

    /// All k-subsets of [0, m) in lexicographic order.
    template <typename F>
    auto for_each_combination(std::size_t m, std::size_t k, F && f) -> bool
    {
        for (std::uint32_t first = 0; first < m; ++first)
            if (! for_each_combination_from(m, k, first, f))
                return false;
        return true;
    }

    /// Runs `task(i)` for i in [0, count) over `threads` workers and returns the
    /// result of the smallest i that produced one. Tasks beyond the best index
    /// found so far are skipped, so serial and parallel runs agree.
    template <typename T>
    auto first_failure(std::size_t count, unsigned threads, const std::function<std::optional<T>(std::size_t)> & task)
        -> std::optional<T>
    {
        if (threads <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                if (auto r = task(i))
                    return r;
            return std::nullopt;
        }

        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{count};
        std::mutex mutex;
        std::optional<T> result;
        std::exception_ptr error;
        {
            std::vector<std::jthread> workers;
            for (unsigned w = 0; w < threads; ++w)
                workers.emplace_back([&] {
                    while (true) {
                        const auto i = next.fetch_add(1);
                        if (i >= count || i >= best.load())
                            return;
                        try {
                            auto r = task(i);
                            if (r) {
                                std::lock_guard lock{mutex};
                                if (i < best.load()) {
                                    best = i;
                                    result = std::move(r);
                                    error = nullptr;
                                }
                            }
                        }
                        catch (...) {
                            // an exception counts as the outcome of task i
                            std::lock_guard lock{mutex};
                            if (i < best.load()) {
                                best = i;
                                result.reset();
                                error = std::current_exception();
                            }
                        }
                    }
                });
        }
        if (error)
            std::rethrow_exception(error);
        return result;
    }
}
