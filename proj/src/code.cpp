#include <sscodes/code.hpp>
#include <sscodes/errors.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <sstream>

namespace sscodes
{
    Code::Code(std::size_t n, std::size_t q, const std::vector<Word> & codewords) :
        n_(n),
        m_(codewords.size()),
        q_(q)
    {
        if (n == 0)
            throw InvalidArgument("code length must be positive");
        if (q == 0)
            throw InvalidArgument("alphabet size must be positive");
        data_.reserve(n * m_);
        for (std::size_t j = 0; j < m_; ++j) {
            const auto & w = codewords[j];
            if (w.size() != n)
                throw InvalidArgument("codeword " + std::to_string(j + 1) + " has length " + std::to_string(w.size())
                    + ", expected " + std::to_string(n));
            for (auto s : w)
                if (s >= q)
                    throw InvalidArgument("symbol " + std::to_string(s) + " in codeword " + std::to_string(j + 1)
                        + " is not below q = " + std::to_string(q));
            data_.insert(data_.end(), w.begin(), w.end());
        }
        std::set<Word> seen;
        for (std::size_t j = 0; j < m_; ++j)
            if (! seen.insert(codeword(j)).second)
                throw InvalidArgument("duplicate codeword at column " + std::to_string(j + 1));
    }

    auto Code::from_rows(std::size_t q, const std::vector<std::vector<Symbol>> & rows) -> Code
    {
        if (rows.empty())
            throw InvalidArgument("code needs at least one row");
        const auto m = rows.front().size();
        std::vector<Word> words(m, Word(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m)
                throw InvalidArgument("ragged code rows");
            for (std::size_t j = 0; j < m; ++j)
                words[j][i] = rows[i][j];
        }
        return Code{rows.size(), q, words};
    }

    auto Code::column(std::size_t index) const -> std::span<const Symbol>
    {
        if (index >= m_)
            throw InvalidArgument("column index " + std::to_string(index) + " out of range");
        return {data_.data() + index * n_, n_};
    }

    auto Code::codeword(std::size_t index) const -> Word
    {
        auto c = column(index);
        return {c.begin(), c.end()};
    }

    auto Code::codewords() const -> std::vector<Word>
    {
        std::vector<Word> result;
        result.reserve(m_);
        for (std::size_t j = 0; j < m_; ++j)
            result.push_back(codeword(j));
        return result;
    }

    Coalition::Coalition(std::initializer_list<std::uint32_t> indices) :
        Coalition(std::vector<std::uint32_t>(indices))
    {
    }

    Coalition::Coalition(std::vector<std::uint32_t> indices) :
        members(std::move(indices))
    {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    auto Coalition::contains(std::uint32_t index) const -> bool
    {
        return std::binary_search(members.begin(), members.end(), index);
    }

    ValueSet::ValueSet(std::size_t q) :
        q_(q)
    {
    }

    ValueSet::ValueSet(std::size_t q, std::initializer_list<Symbol> values) :
        q_(q)
    {
        for (auto v : values)
            insert(v);
    }

    auto ValueSet::insert(Symbol s) -> void
    {
        if (s >= q_)
            throw InvalidArgument("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q_));
        if (small()) {
            mask_ |= std::uint64_t{1} << s;
            return;
        }
        auto pos = std::lower_bound(sorted_.begin(), sorted_.end(), s);
        if (pos == sorted_.end() || *pos != s)
            sorted_.insert(pos, s);
    }

    auto ValueSet::merge(const ValueSet & other) -> void
    {
        if (other.q_ != q_)
            throw InvalidArgument("value-sets over different alphabets");
        if (small()) {
            mask_ |= other.mask_;
            return;
        }
        std::vector<Symbol> merged;
        std::set_union(sorted_.begin(), sorted_.end(), other.sorted_.begin(), other.sorted_.end(),
            std::back_inserter(merged));
        sorted_ = std::move(merged);
    }

    auto ValueSet::contains(Symbol s) const -> bool
    {
        if (s >= q_)
            return false;
        if (small())
            return (mask_ >> s) & 1;
        return std::binary_search(sorted_.begin(), sorted_.end(), s);
    }

    auto ValueSet::size() const -> std::size_t
    {
        return small() ? static_cast<std::size_t>(std::popcount(mask_)) : sorted_.size();
    }

    auto ValueSet::values() const -> std::vector<Symbol>
    {
        if (! small())
            return sorted_;
        std::vector<Symbol> result;
        for (auto m = mask_; m; m &= m - 1)
            result.push_back(static_cast<Symbol>(std::countr_zero(m)));
        return result;
    }

    auto ValueSet::is_subset_of(const ValueSet & other) const -> bool
    {
        if (small() && other.small())
            return (mask_ & ~other.mask_) == 0;
        for (auto v : values())
            if (! other.contains(v))
                return false;
        return true;
    }

    auto ValueSet::append_encoding(std::string & out) const -> void
    {
        const auto vals = values();
        auto put = [&](std::uint32_t x) { out.append(reinterpret_cast<const char *>(&x), sizeof x); };
        put(static_cast<std::uint32_t>(vals.size()));
        for (auto v : vals)
            put(v);
    }

    auto ValueSet::operator== (const ValueSet & other) const -> bool
    {
        return q_ == other.q_ && mask_ == other.mask_ && sorted_ == other.sorted_;
    }

    DescendantSet::DescendantSet(std::size_t q, std::vector<ValueSet> sets) :
        q_(q),
        sets_(std::move(sets))
    {
        for (const auto & s : sets_)
            if (s.alphabet() != q_)
                throw InvalidArgument("descendant value-set over the wrong alphabet");
    }

    auto DescendantSet::covers(std::span<const Symbol> word) const -> bool
    {
        if (word.size() != sets_.size())
            throw InvalidArgument("word length does not match descendant length");
        for (std::size_t i = 0; i < word.size(); ++i)
            if (! sets_[i].contains(word[i]))
                return false;
        return true;
    }

    auto DescendantSet::is_subset_of(const DescendantSet & other) const -> bool
    {
        if (other.sets_.size() != sets_.size())
            return false;
        for (std::size_t i = 0; i < sets_.size(); ++i)
            if (! sets_[i].is_subset_of(other.sets_[i]))
                return false;
        return true;
    }

    auto DescendantSet::encoding() const -> std::string
    {
        std::string out;
        for (const auto & s : sets_)
            s.append_encoding(out);
        return out;
    }

    auto DescendantSet::operator== (const DescendantSet & other) const -> bool
    {
        return q_ == other.q_ && sets_ == other.sets_;
    }

    namespace
    {
        auto check_coalition(const Code & code, const Coalition & coalition) -> void
        {
            for (auto c : coalition.members)
                if (c >= code.size())
                    throw InvalidArgument("coalition member " + std::to_string(c + 1) + " exceeds M = "
                        + std::to_string(code.size()));
        }
    }

    auto coordinate_set(const Code & code, const Coalition & coalition, std::size_t coordinate) -> ValueSet
    {
        if (coordinate >= code.length())
            throw InvalidArgument("coordinate " + std::to_string(coordinate) + " out of range");
        check_coalition(code, coalition);
        ValueSet result{code.alphabet()};
        for (auto c : coalition.members)
            result.insert(code.at(coordinate, c));
        return result;
    }

    auto descendant(const Code & code, const Coalition & coalition) -> DescendantSet
    {
        if (coalition.empty())
            throw InvalidArgument("descendant of an empty coalition");
        std::vector<ValueSet> sets;
        sets.reserve(code.length());
        for (std::size_t i = 0; i < code.length(); ++i)
            sets.push_back(coordinate_set(code, coalition, i));
        return DescendantSet{code.alphabet(), std::move(sets)};
    }

    auto descendant_members(const Code & code, const DescendantSet & d, std::size_t * visits) -> Coalition
    {
        if (d.length() != code.length() || d.alphabet() != code.alphabet())
            throw InvalidArgument("descendant set dimensions do not match the code");
        std::vector<std::uint32_t> members;
        for (std::size_t j = 0; j < code.size(); ++j) {
            if (visits)
                ++*visits;
            if (d.covers(code.column(j)))
                members.push_back(static_cast<std::uint32_t>(j));
        }
        return Coalition{std::move(members)};
    }

    auto a_sets(const Code & code, std::size_t coordinate) -> ASetFamily
    {
        if (coordinate >= code.length())
            throw InvalidArgument("coordinate " + std::to_string(coordinate) + " out of range");
        ASetFamily family;
        family.coordinate = coordinate;
        for (std::size_t j = 0; j < code.size(); ++j) {
            Word projection;
            projection.reserve(code.length() - 1);
            for (std::size_t i = 0; i < code.length(); ++i)
                if (i != coordinate)
                    projection.push_back(code.at(i, j));
            const auto symbol = code.at(coordinate, j);
            family.classes[symbol].insert(std::move(projection));
            family.sources[symbol].push_back(static_cast<std::uint32_t>(j));
        }
        return family;
    }

    auto hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) -> std::size_t
    {
        if (a.size() != b.size())
            throw InvalidArgument("hamming distance of words with different lengths");
        std::size_t d = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            d += a[i] != b[i];
        return d;
    }

    namespace
    {
        // Non-comment, non-blank lines of a text file.
        auto content_lines(std::string_view text) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> lines;
            while (! text.empty()) {
                auto end = text.find('\n');
                auto line = text.substr(0, end);
                text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
                if (! line.empty() && line.back() == '\r')
                    line.remove_suffix(1);
                const auto first = line.find_first_not_of(" \t");
                if (first == std::string_view::npos || line[first] == '#')
                    continue;
                lines.push_back(line);
            }
            return lines;
        }

        auto parse_integers(std::string_view line) -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> values;
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                    ++pos;
                if (pos == line.size())
                    break;
                std::uint64_t v = 0;
                auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
                if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
                    throw ParseError("malformed integer in line: '" + std::string(line) + "'");
                values.push_back(v);
                pos = static_cast<std::size_t>(ptr - line.data());
            }
            return values;
        }
    }

    auto parse_code(std::string_view text) -> Code
    {
        const auto lines = content_lines(text);
        if (lines.empty())
            throw ParseError("empty code file");
        const auto header = parse_integers(lines[0]);
        if (header.size() != 3)
            throw ParseError("malformed header: expected 'n M q'");
        const auto n = header[0], m = header[1], q = header[2];
        if (n == 0 || q == 0)
            throw ParseError("malformed header: n and q must be positive");
        if (lines.size() != n + 1)
            throw ParseError("expected " + std::to_string(n) + " coordinate rows, found "
                + std::to_string(lines.size() - 1));
        std::vector<std::vector<Symbol>> rows;
        for (std::size_t i = 0; i < n; ++i) {
            const auto values = parse_integers(lines[i + 1]);
            if (values.size() != m)
                throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(values.size())
                    + " symbols, expected " + std::to_string(m));
            std::vector<Symbol> row;
            for (auto v : values) {
                if (v >= q)
                    throw ParseError("symbol " + std::to_string(v) + " in row " + std::to_string(i + 1)
                        + " is not below q = " + std::to_string(q));
                row.push_back(static_cast<Symbol>(v));
            }
            rows.push_back(std::move(row));
        }
        std::vector<Word> words(m, Word(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                words[j][i] = rows[i][j];
        try {
            return Code{n, q, words};
        }
        catch (const InvalidArgument & e) {
            throw ParseError(e.what());
        }
    }

    auto serialize_code(const Code & code) -> std::string
    {
        std::ostringstream out;
        out << code.length() << ' ' << code.size() << ' ' << code.alphabet() << '\n';
        for (std::size_t i = 0; i < code.length(); ++i) {
            for (std::size_t j = 0; j < code.size(); ++j)
                out << (j ? " " : "") << code.at(i, j);
            out << '\n';
        }
        return out.str();
    }

    auto parse_observation(std::string_view text) -> DescendantSet
    {
        const auto lines = content_lines(text);
        if (lines.empty())
            throw ParseError("empty observation file");
        const auto header = parse_integers(lines[0]);
        if (header.size() != 2 || header[0] == 0 || header[1] == 0)
            throw ParseError("malformed observation header: expected 'n q'");
        const auto n = header[0], q = header[1];
        if (lines.size() != n + 1)
            throw ParseError("expected " + std::to_string(n) + " value-set lines, found "
                + std::to_string(lines.size() - 1));
        std::vector<ValueSet> sets;
        for (std::size_t i = 0; i < n; ++i) {
            ValueSet s{q};
            for (auto v : parse_integers(lines[i + 1])) {
                if (v >= q)
                    throw ParseError("observed symbol " + std::to_string(v) + " is not below q");
                s.insert(static_cast<Symbol>(v));
            }
            sets.push_back(std::move(s));
        }
        return DescendantSet{q, std::move(sets)};
    }

    auto serialize_observation(const DescendantSet & d) -> std::string
    {
        std::ostringstream out;
        out << d.length() << ' ' << d.alphabet() << '\n';
        for (const auto & s : d.sets()) {
            bool first = true;
            for (auto v : s.values()) {
                out << (first ? "" : " ") << v;
                first = false;
            }
            out << '\n';
        }
        return out.str();
    }
}
