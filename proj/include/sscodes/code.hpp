#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sscodes
{
    using Symbol = std::uint32_t;
    using Word = std::vector<Symbol>;

    /// An (n, M, q) code stored column-major: columns are codewords, rows are
    /// coordinates. Symbols lie in [0, q) and codewords are pairwise distinct.
    class Code
    {
    public:
        Code(std::size_t n, std::size_t q, const std::vector<Word> & codewords);

        /// rows[i] holds coordinate i of every codeword.
        static auto from_rows(std::size_t q, const std::vector<std::vector<Symbol>> & rows) -> Code;

        auto length() const -> std::size_t { return n_; }
        auto size() const -> std::size_t { return m_; }
        auto alphabet() const -> std::size_t { return q_; }

        auto at(std::size_t coordinate, std::size_t column) const -> Symbol { return data_[column * n_ + coordinate]; }
        auto column(std::size_t index) const -> std::span<const Symbol>;
        auto codeword(std::size_t index) const -> Word;
        auto codewords() const -> std::vector<Word>;

        auto operator== (const Code &) const -> bool = default;

    private:
        std::size_t n_ = 0;
        std::size_t m_ = 0;
        std::size_t q_ = 0;
        std::vector<Symbol> data_;
    };

    /// Sorted, duplicate-free set of 0-based column indices.
    struct Coalition
    {
        std::vector<std::uint32_t> members;

        Coalition() = default;
        Coalition(std::initializer_list<std::uint32_t> indices);
        explicit Coalition(std::vector<std::uint32_t> indices);

        auto size() const -> std::size_t { return members.size(); }
        auto empty() const -> bool { return members.empty(); }
        auto contains(std::uint32_t index) const -> bool;

        auto operator<=> (const Coalition &) const = default;
    };

    /// Subset of the alphabet [0, q): a 64-bit mask when q <= 64, a sorted list otherwise.
    class ValueSet
    {
    public:
        explicit ValueSet(std::size_t q);
        ValueSet(std::size_t q, std::initializer_list<Symbol> values);

        auto alphabet() const -> std::size_t { return q_; }
        auto insert(Symbol s) -> void;
        auto merge(const ValueSet & other) -> void;
        auto contains(Symbol s) const -> bool;
        auto size() const -> std::size_t;
        auto empty() const -> bool { return size() == 0; }
        auto values() const -> std::vector<Symbol>;
        auto is_subset_of(const ValueSet & other) const -> bool;

        /// Length-prefixed sorted values; equal sets give equal encodings.
        auto append_encoding(std::string & out) const -> void;

        auto operator== (const ValueSet & other) const -> bool;

    private:
        auto small() const -> bool { return q_ <= 64; }

        std::size_t q_;
        std::uint64_t mask_ = 0;
        std::vector<Symbol> sorted_;
    };

    /// desc(C0) in compact form: one value-set per coordinate.
    class DescendantSet
    {
    public:
        DescendantSet(std::size_t q, std::vector<ValueSet> sets);

        auto alphabet() const -> std::size_t { return q_; }
        auto length() const -> std::size_t { return sets_.size(); }
        auto sets() const -> const std::vector<ValueSet> & { return sets_; }
        auto at(std::size_t coordinate) const -> const ValueSet & { return sets_[coordinate]; }

        /// Whether the word lies in the product of the value-sets.
        auto covers(std::span<const Symbol> word) const -> bool;
        /// Coordinatewise inclusion.
        auto is_subset_of(const DescendantSet & other) const -> bool;
        auto encoding() const -> std::string;

        auto operator== (const DescendantSet & other) const -> bool;

    private:
        std::size_t q_;
        std::vector<ValueSet> sets_;
    };

    /// Classes A_i^(j): projections (coordinate j removed) of the codewords with symbol i at j.
    struct ASetFamily
    {
        std::size_t coordinate = 0;
        std::map<Symbol, std::set<Word>> classes;
        /// Column indices contributing to each class.
        std::map<Symbol, std::vector<std::uint32_t>> sources;
    };

    /// { c(i) : c in coalition }.
    auto coordinate_set(const Code & code, const Coalition & coalition, std::size_t coordinate) -> ValueSet;

    auto descendant(const Code & code, const Coalition & coalition) -> DescendantSet;

    /// desc ∩ C in one pass over the codewords. `visits`, when given, is
    /// incremented once per codeword examined.
    auto descendant_members(const Code & code, const DescendantSet & d, std::size_t * visits = nullptr) -> Coalition;

    auto a_sets(const Code & code, std::size_t coordinate) -> ASetFamily;

    auto hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) -> std::size_t;

    /// Text format: "n M q" header, then n rows of M symbols; '#' starts a comment line.
    auto parse_code(std::string_view text) -> Code;
    auto serialize_code(const Code & code) -> std::string;

    /// Observation file: "n q" header, then n lines each listing one value-set.
    auto parse_observation(std::string_view text) -> DescendantSet;
    auto serialize_observation(const DescendantSet & d) -> std::string;
}
