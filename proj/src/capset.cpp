#include <sscodes/capset.hpp>
#include <sscodes/errors.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

namespace sscodes
{
    namespace
    {
        auto check_point(const GaloisField & base, std::size_t dim, const VectorElement & v) -> void
        {
            if (v.components.size() != dim)
                throw InvalidArgument("point has dimension " + std::to_string(v.components.size()) + ", expected "
                    + std::to_string(dim));
            for (auto c : v.components)
                if (c >= base.order())
                    throw InvalidArgument("point component " + std::to_string(c) + " outside " + base.describe());
        }

        auto space_size(const GaloisField & base, std::size_t dim) -> std::uint64_t
        {
            std::uint64_t size = 1;
            for (std::size_t i = 0; i < dim; ++i) {
                if (size > (std::uint64_t{1} << 24) / base.order())
                    throw ResourceLimit("affine space of dimension " + std::to_string(dim) + " over "
                        + base.describe() + " is too large to enumerate");
                size *= base.order();
            }
            return size;
        }

        // Points of the affine space as index-addressable vectors, with the line
        // through two points enumerated by index.
        class Space
        {
        public:
            Space(const GaloisField & base, std::size_t dim) :
                base_(base),
                dim_(dim),
                size_(space_size(base, dim))
            {
                points_.reserve(size_);
                for (std::uint64_t i = 0; i < size_; ++i)
                    points_.push_back(point_from_index(base, dim, i));
            }

            auto size() const -> std::uint64_t { return size_; }
            auto point(std::uint64_t i) const -> const VectorElement & { return points_[i]; }

            /// Calls f(index) for every point a + lambda (b - a), lambda != 0, 1.
            template <typename F>
            auto for_each_third(std::uint64_t a, std::uint64_t b, F && f) const -> void
            {
                const auto diff = vector_sub(base_, points_[b], points_[a]);
                for (std::uint64_t lambda = 0; lambda < base_.order(); ++lambda) {
                    if (lambda == 0 || lambda == 1)
                        continue;
                    f(point_index(base_, vector_add(base_, points_[a], vector_scale(base_, lambda, diff))));
                }
            }

        private:
            GaloisField base_;
            std::size_t dim_;
            std::uint64_t size_;
            std::vector<VectorElement> points_;
        };

        // Adds points in `order`, skipping any that would close a collinear triple.
        auto greedy_scan(const Space & space, const std::vector<std::uint64_t> & order) -> std::vector<std::uint64_t>
        {
            std::vector<char> blocked(space.size(), 0);
            std::vector<std::uint64_t> chosen;
            for (auto p : order) {
                if (blocked[p])
                    continue;
                for (auto c : chosen)
                    space.for_each_third(c, p, [&](std::uint64_t r) { blocked[r] = 1; });
                blocked[p] = 1;
                chosen.push_back(p);
            }
            return chosen;
        }

        auto to_points(const Space & space, std::vector<std::uint64_t> indices) -> std::vector<VectorElement>
        {
            std::sort(indices.begin(), indices.end());
            std::vector<VectorElement> points;
            for (auto i : indices)
                points.push_back(space.point(i));
            return points;
        }
    }

    auto collinear(const GaloisField & base, const VectorElement & x, const VectorElement & y, const VectorElement & z)
        -> bool
    {
        const auto dim = x.components.size();
        check_point(base, dim, x);
        check_point(base, dim, y);
        check_point(base, dim, z);
        if (x == y || x == z || y == z)
            throw InvalidArgument("collinearity needs three distinct points");
        const auto u = vector_sub(base, y, x);
        const auto v = vector_sub(base, z, x);
        std::size_t pivot = 0;
        while (u.components[pivot] == 0)
            ++pivot;
        const auto lambda = base.mul(v.components[pivot], base.inv(u.components[pivot]));
        return vector_scale(base, lambda, u) == v;
    }

    auto find_collinear_triple(const CapSet & cap) -> std::optional<std::array<std::size_t, 3>>
    {
        const auto & p = cap.points;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                for (std::size_t k = j + 1; k < p.size(); ++k)
                    if (collinear(cap.base, p[i], p[j], p[k]))
                        return std::array<std::size_t, 3>{i, j, k};
        return std::nullopt;
    }

    auto capset_greedy(const GaloisField & base, std::size_t dim, GreedyOrder order, std::uint64_t seed) -> CapSet
    {
        if (dim == 0)
            throw InvalidArgument("cap dimension must be positive");
        const Space space{base, dim};
        std::vector<std::uint64_t> sequence(space.size());
        std::iota(sequence.begin(), sequence.end(), std::uint64_t{0});
        std::string source = "greedy-canonical";

        if (order == GreedyOrder::Parabola) {
            if (dim != 2)
                throw InvalidArgument("parabola order needs dimension 2");
            std::vector<std::uint64_t> front;
            for (std::uint64_t i = 0; i < base.order(); ++i)
                front.push_back(point_index(base, VectorElement{{i, base.mul(i, i)}}));
            std::vector<std::uint64_t> rest;
            for (auto p : sequence)
                if (std::find(front.begin(), front.end(), p) == front.end())
                    rest.push_back(p);
            front.insert(front.end(), rest.begin(), rest.end());
            sequence = std::move(front);
            source = "greedy-parabola";
        }
        else if (order == GreedyOrder::Random) {
            std::mt19937_64 rng{seed};
            std::shuffle(sequence.begin(), sequence.end(), rng);
            source = "greedy-random(seed=" + std::to_string(seed) + ")";
        }

        return CapSet{base, dim, to_points(space, greedy_scan(space, sequence)), source, false};
    }

    auto capset_exact(const GaloisField & base, std::size_t dim, std::uint64_t node_budget) -> CapSet
    {
        if (dim == 0)
            throw InvalidArgument("cap dimension must be positive");
        const Space space{base, dim};

        // Pinned start: 0 and the first min(dim, 2) unit vectors. For dim = 1 any
        // two points form a maximum cap.
        std::vector<std::uint64_t> pinned{0, 1};
        if (dim >= 2)
            pinned.push_back(base.order());

        std::vector<std::uint64_t> best;
        std::uint64_t nodes = 0;
        bool exhausted_budget = false;

        std::vector<std::uint64_t> chosen;
        // counts how many chosen pairs block each point
        std::vector<std::uint32_t> blocked(space.size(), 0);

        auto place = [&](std::uint64_t p, int delta) {
            for (auto c : chosen)
                space.for_each_third(c, p, [&](std::uint64_t r) { blocked[r] += delta; });
        };

        for (auto p : pinned) {
            place(p, 1);
            chosen.push_back(p);
        }

        // Candidates are unblocked points above the last pinned one, in index
        // order; a point below it never helps since pins are fixed.
        auto recurse = [&](auto && self, const std::vector<std::uint64_t> & candidates) -> void {
            if (chosen.size() > best.size())
                best = chosen;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                if (chosen.size() + (candidates.size() - i) <= best.size())
                    return;
                if (++nodes > node_budget) {
                    exhausted_budget = true;
                    return;
                }
                const auto p = candidates[i];
                place(p, 1);
                chosen.push_back(p);
                std::vector<std::uint64_t> next;
                for (std::size_t j = i + 1; j < candidates.size(); ++j)
                    if (blocked[candidates[j]] == 0)
                        next.push_back(candidates[j]);
                self(self, next);
                chosen.pop_back();
                place(p, -1);
                if (exhausted_budget)
                    return;
            }
        };

        std::vector<std::uint64_t> candidates;
        for (std::uint64_t p = 0; p < space.size(); ++p)
            if (blocked[p] == 0 && std::find(pinned.begin(), pinned.end(), p) == pinned.end())
                candidates.push_back(p);
        if (dim == 1)
            candidates.clear();
        recurse(recurse, candidates);

        return CapSet{base, dim, to_points(space, best), "exact", ! exhausted_budget};
    }

    auto parse_cap(std::string_view text) -> CapSet
    {
        std::vector<std::vector<std::uint64_t>> lines;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            std::istringstream fields{line};
            std::vector<std::uint64_t> values;
            std::string token;
            while (fields >> token) {
                std::uint64_t v = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
                if (ec != std::errc{} || ptr != token.data() + token.size())
                    throw ParseError("malformed integer '" + token + "' in cap file");
                values.push_back(v);
            }
            lines.push_back(std::move(values));
        }
        if (lines.empty() || lines[0].size() != 3)
            throw ParseError("cap file header must be 'q1 n k'");
        const auto q1 = lines[0][0], n = lines[0][1], k = lines[0][2];
        if (n == 0)
            throw ParseError("cap dimension must be positive");
        if (lines.size() != k + 1)
            throw ParseError("cap file declares " + std::to_string(k) + " points but lists "
                + std::to_string(lines.size() - 1));
        GaloisField base = [&] {
            try {
                return GaloisField::of_order(q1);
            }
            catch (const InvalidArgument & e) {
                throw ParseError(e.what());
            }
        }();
        CapSet cap{base, n, {}, "file", false};
        for (std::size_t i = 1; i <= k; ++i) {
            if (lines[i].size() != n)
                throw ParseError("cap point " + std::to_string(i) + " has " + std::to_string(lines[i].size())
                    + " coordinates, expected " + std::to_string(n));
            for (auto c : lines[i])
                if (c >= q1)
                    throw ParseError("cap point " + std::to_string(i) + " has a coordinate outside GF(" + std::to_string(q1) + ")");
            cap.points.push_back(VectorElement{lines[i]});
        }
        return cap;
    }

    auto serialize_cap(const CapSet & cap) -> std::string
    {
        std::ostringstream out;
        out << cap.base.order() << ' ' << cap.dim << ' ' << cap.points.size() << '\n';
        for (const auto & p : cap.points) {
            for (std::size_t i = 0; i < p.components.size(); ++i)
                out << (i ? " " : "") << p.components[i];
            out << '\n';
        }
        return out.str();
    }
}
