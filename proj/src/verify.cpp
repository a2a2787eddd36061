#include <sscodes/errors.hpp>
#include <sscodes/verify.hpp>

#include "detail.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <iterator>
#include <map>
#include <string_view>
#include <tuple>
#include <unordered_map>

namespace sscodes
{
    auto to_string(Property p) -> std::string
    {
        switch (p) {
            case Property::FPC: return "FPC";
            case Property::SC: return "SC";
            case Property::SSC: return "SSC";
        }
        return "?";
    }

    auto to_string(Method m) -> std::string
    {
        return m == Method::Fast ? "fast" : "definitional";
    }

    auto to_string(ConfigKind k) -> std::string
    {
        switch (k) {
            case ConfigKind::Delta1: return "delta1";
            case ConfigKind::Delta2: return "delta2";
            case ConfigKind::Delta3: return "delta3";
            case ConfigKind::Nabla: return "nabla";
        }
        return "?";
    }

    auto ForbiddenConfigWitness::colliding_coalitions() const -> CollisionWitness
    {
        const auto & c = columns;
        if (kind == ConfigKind::Nabla)
            return {Coalition{c[0], c[1], c[2]}, Coalition{c[3], c[4], c[5]}};
        return {Coalition{c[0], c[1], c[2]}, Coalition{c[1], c[2], c[3]}};
    }

    namespace
    {
        auto require_t(std::size_t t) -> void
        {
            if (t == 0)
                throw InvalidArgument("coalition size bound t must be at least 1");
        }

        auto require_length3(const Code & code, std::string_view what) -> void
        {
            if (code.length() != 3)
                throw InvalidArgument(std::string(what) + " applies to length-3 codes only (n = "
                    + std::to_string(code.length()) + ")");
        }

        auto negative(Property p, std::size_t t, Method m, Witness w) -> VerificationReport
        {
            return VerificationReport{p, t, m, false, std::move(w), std::nullopt};
        }

        auto positive(Property p, std::size_t t, Method m) -> VerificationReport
        {
            return VerificationReport{p, t, m, true, std::nullopt, std::nullopt};
        }

        auto to_coalition(std::span<const std::uint32_t> members) -> Coalition
        {
            return Coalition{std::vector<std::uint32_t>(members.begin(), members.end())};
        }

    }

    auto is_fpc(const Code & code, std::size_t t, const VerifyOptions & options) -> VerificationReport
    {
        require_t(t);
        const detail::PackedCode packed{code};
        const std::size_t m = code.size();
        const std::size_t kmax = std::min(t, m);

        std::function<std::optional<FramingWitness>(std::size_t)> task = [&](std::size_t index) {
            const std::size_t k = index / m + 1;
            const auto first = static_cast<std::uint32_t>(index % m);
            std::optional<FramingWitness> found;
            detail::for_each_combination_from(m, k, first, [&](std::span<const std::uint32_t> members) {
                const auto acc = packed.descendant_of(members);
                for (std::uint32_t j = 0; j < m; ++j) {
                    if (std::find(members.begin(), members.end(), j) != members.end())
                        continue;
                    if (packed.covers(acc, j)) {
                        found = FramingWitness{to_coalition(members), j};
                        return false;
                    }
                }
                return true;
            });
            return found;
        };

        if (auto w = detail::first_failure<FramingWitness>(kmax * m, options.threads, task))
            return negative(Property::FPC, t, Method::Definitional, *w);
        return positive(Property::FPC, t, Method::Definitional);
    }

    auto is_sc(const Code & code, std::size_t t) -> VerificationReport
    {
        require_t(t);
        const detail::PackedCode packed{code};
        const std::size_t m = code.size();
        std::unordered_map<std::string, Coalition> seen;
        // Only keys hit twice get a group; a disjoint colliding pair is the
        // more telling witness, so the smallest one is preferred.
        std::unordered_map<std::string, std::vector<Coalition>> groups;
        std::optional<CollisionWitness> first;

        for (std::size_t k = 1; k <= std::min(t, m); ++k)
            detail::for_each_combination(m, k, [&](std::span<const std::uint32_t> members) {
                const auto acc = packed.descendant_of(members);
                std::string key(reinterpret_cast<const char *>(acc.data()), acc.size() * sizeof(std::uint64_t));
                auto [it, inserted] = seen.try_emplace(key, to_coalition(members));
                if (! inserted) {
                    if (! first)
                        first = CollisionWitness{it->second, to_coalition(members)};
                    auto & g = groups[key];
                    if (g.empty())
                        g.push_back(it->second);
                    g.push_back(to_coalition(members));
                }
                return true;
            });

        if (! first)
            return positive(Property::SC, t, Method::Definitional);
        std::optional<CollisionWitness> disjoint;
        for (auto & [key, g] : groups) {
            std::sort(g.begin(), g.end());
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = a + 1; b < g.size(); ++b) {
                    const auto & x = g[a].members;
                    const auto & y = g[b].members;
                    std::vector<std::uint32_t> common;
                    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
                    if (! common.empty())
                        continue;
                    if (! disjoint || std::tie(g[a], g[b]) < std::tie(disjoint->first, disjoint->second))
                        disjoint = CollisionWitness{g[a], g[b]};
                    break; // later partners of g[a] are larger
                }
        }
        return negative(Property::SC, t, Method::Definitional, disjoint ? *disjoint : *first);
    }

    auto is_ssc(const Code & code, std::size_t t, const VerifyOptions & options) -> VerificationReport
    {
        require_t(t);
        if (options.subset_cap > 40)
            throw InvalidArgument("subset cap above 40 is not supported");
        const detail::PackedCode packed{code};
        const std::size_t m = code.size();
        const std::size_t kmax = std::min(t, m);

        std::function<std::optional<SeparationWitness>(std::size_t)> task = [&](std::size_t index) {
            const std::size_t k = index / m + 1;
            const auto first = static_cast<std::uint32_t>(index % m);
            std::optional<SeparationWitness> found;
            detail::for_each_combination_from(m, k, first, [&](std::span<const std::uint32_t> members) {
                const auto acc = packed.descendant_of(members);
                std::vector<std::uint32_t> candidates;
                for (std::uint32_t j = 0; j < m; ++j)
                    if (packed.covers(acc, j))
                        candidates.push_back(j);
                if (candidates.size() > options.subset_cap)
                    throw ResourceLimit("desc(C0) ∩ C has " + std::to_string(candidates.size())
                        + " codewords, above the subset enumeration cap of " + std::to_string(options.subset_cap)
                        + "; the definitional SSC check is infeasible for this input");

                const auto inter = detail::subset_intersection(packed, candidates, acc);
                std::vector<std::uint32_t> kept;
                for (std::size_t b = 0; b < candidates.size(); ++b)
                    if ((inter >> b) & 1)
                        kept.push_back(candidates[b]);
                if (! std::equal(kept.begin(), kept.end(), members.begin(), members.end())) {
                    found = SeparationWitness{to_coalition(members), Coalition{std::move(kept)}};
                    return false;
                }
                return true;
            });
            return found;
        };

        if (auto w = detail::first_failure<SeparationWitness>(kmax * m, options.threads, task))
            return negative(Property::SSC, t, Method::Definitional, *w);
        return positive(Property::SSC, t, Method::Definitional);
    }

    auto explained_intersection(const Code & code, const Coalition & c0) -> Coalition
    {
        const auto target = descendant(code, c0);
        const auto candidates = descendant_members(code, target);
        std::vector<std::uint32_t> kept;
        for (auto c : c0.members) {
            std::vector<std::uint32_t> rest;
            for (auto d : candidates.members)
                if (d != c)
                    rest.push_back(d);
            if (rest.empty() || ! (descendant(code, Coalition{std::move(rest)}) == target))
                kept.push_back(c);
        }
        return Coalition{std::move(kept)};
    }

    auto is_fpc2_fast(const Code & code) -> VerificationReport
    {
        require_length3(code, "the A-set frameproof criterion");
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r1 = j == 0 ? 1 : 0, r2 = j == 2 ? 1 : 2;
            // projection -> columns carrying it; symbol -> class size
            std::map<std::pair<Symbol, Symbol>, std::vector<std::uint32_t>> by_projection;
            std::map<Symbol, std::vector<std::uint32_t>> by_symbol;
            for (std::uint32_t c = 0; c < code.size(); ++c) {
                by_projection[{code.at(r1, c), code.at(r2, c)}].push_back(c);
                by_symbol[code.at(j, c)].push_back(c);
            }
            for (std::uint32_t c = 0; c < code.size(); ++c) {
                const auto & shared = by_projection[{code.at(r1, c), code.at(r2, c)}];
                const auto & cls = by_symbol[code.at(j, c)];
                if (shared.size() < 2 || cls.size() < 2)
                    continue;
                // c's projection also sits in another class, and c's class has
                // another member: those two frame c.
                const auto other = shared[0] != c ? shared[0] : shared[1];
                const auto mate = cls[0] != c ? cls[0] : cls[1];
                return negative(Property::FPC, 2, Method::Fast, FramingWitness{Coalition{other, mate}, c});
            }
        }
        return positive(Property::FPC, 2, Method::Fast);
    }

    namespace
    {
        struct TupleHash
        {
            auto operator() (const std::array<Symbol, 3> & a) const -> std::size_t
            {
                std::size_t h = a[0];
                h = h * 0x9E3779B97F4A7C15ull + a[1];
                h = h * 0x9E3779B97F4A7C15ull + a[2];
                return h ^ (h >> 29);
            }
        };

        using TupleIndex = std::unordered_map<std::array<Symbol, 3>, std::uint32_t, TupleHash>;

        auto find_nabla(const Code & code, const TupleIndex & index,
            const std::array<std::map<Symbol, std::vector<std::uint32_t>>, 3> & by_row)
            -> std::optional<ForbiddenConfigWitness>
        {
            auto lookup = [&](Symbol x, Symbol y, Symbol z) -> std::optional<std::uint32_t> {
                auto it = index.find({x, y, z});
                if (it == index.end())
                    return std::nullopt;
                return it->second;
            };

            // columns: 1=(a1,a2,a3) 2=(b1,b2,b3) 3=(c1,c2,c3) 4=(a1,b2,c3) 5=(b1,c2,a3) 6=(c1,a2,b3)
            for (std::uint32_t k1 = 0; k1 < code.size(); ++k1) {
                const Symbol a1 = code.at(0, k1), a2 = code.at(1, k1), a3 = code.at(2, k1);
                for (auto k4 : by_row[0].at(a1)) {
                    const Symbol b2 = code.at(1, k4), c3 = code.at(2, k4);
                    if (b2 == a2 || c3 == a3)
                        continue;
                    for (auto k2 : by_row[1].at(b2)) {
                        const Symbol b1 = code.at(0, k2), b3 = code.at(2, k2);
                        if (b1 == a1 || b3 == a3 || b3 == c3)
                            continue;
                        auto c3_group = by_row[2].find(c3);
                        for (auto k3 : c3_group->second) {
                            const Symbol c1 = code.at(0, k3), c2 = code.at(1, k3);
                            if (c1 == a1 || c1 == b1 || c2 == a2 || c2 == b2)
                                continue;
                            auto k5 = lookup(b1, c2, a3);
                            if (! k5)
                                continue;
                            auto k6 = lookup(c1, a2, b3);
                            if (! k6)
                                continue;
                            return ForbiddenConfigWitness{ConfigKind::Nabla, {k1, k2, k3, k4, *k5, *k6},
                                {{"a1", a1}, {"a2", a2}, {"a3", a3}, {"b1", b1}, {"b2", b2}, {"b3", b3}, {"c1", c1},
                                    {"c2", c2}, {"c3", c3}}};
                        }
                    }
                }
            }
            return std::nullopt;
        }

        // Delta patterns: rows `paired` = (a,a,b,b), `crossed` = (c,d,c,d) and
        // `free` = (e,f,g,e) with a != b, c != d, e not in {f, g}.
        auto find_delta(const Code & code, ConfigKind kind, std::size_t free, std::size_t paired, std::size_t crossed,
            const std::map<Symbol, std::vector<std::uint32_t>> & free_groups)
            -> std::optional<ForbiddenConfigWitness>
        {
            std::map<std::pair<Symbol, Symbol>, std::vector<std::uint32_t>> by_pair;
            for (std::uint32_t c = 0; c < code.size(); ++c)
                by_pair[{code.at(paired, c), code.at(crossed, c)}].push_back(c);

            auto first_with = [&](Symbol x, Symbol y, Symbol avoid) -> std::optional<std::uint32_t> {
                auto it = by_pair.find({x, y});
                if (it == by_pair.end())
                    return std::nullopt;
                for (auto c : it->second)
                    if (code.at(free, c) != avoid)
                        return c;
                return std::nullopt;
            };

            for (const auto & [e, group] : free_groups)
                for (std::size_t x = 0; x < group.size(); ++x)
                    for (std::size_t y = x + 1; y < group.size(); ++y) {
                        const auto k1 = group[x], k4 = group[y];
                        const Symbol a = code.at(paired, k1), c = code.at(crossed, k1);
                        const Symbol b = code.at(paired, k4), d = code.at(crossed, k4);
                        if (a == b || c == d)
                            continue;
                        auto k2 = first_with(a, d, e);
                        if (! k2)
                            continue;
                        auto k3 = first_with(b, c, e);
                        if (! k3)
                            continue;
                        return ForbiddenConfigWitness{kind, {k1, *k2, *k3, k4},
                            {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"f", code.at(free, *k2)},
                                {"g", code.at(free, *k3)}}};
                    }
            return std::nullopt;
        }
    }

    auto find_forbidden_config(const Code & code) -> std::optional<ForbiddenConfigWitness>
    {
        require_length3(code, "forbidden configuration search");
        TupleIndex index;
        std::array<std::map<Symbol, std::vector<std::uint32_t>>, 3> by_row;
        for (std::uint32_t c = 0; c < code.size(); ++c) {
            index.emplace(std::array<Symbol, 3>{code.at(0, c), code.at(1, c), code.at(2, c)}, c);
            for (std::size_t r = 0; r < 3; ++r)
                by_row[r][code.at(r, c)].push_back(c);
        }

        if (auto w = find_nabla(code, index, by_row))
            return w;
        if (auto w = find_delta(code, ConfigKind::Delta1, 1, 0, 2, by_row[1]))
            return w;
        if (auto w = find_delta(code, ConfigKind::Delta2, 2, 0, 1, by_row[2]))
            return w;
        return find_delta(code, ConfigKind::Delta3, 0, 1, 2, by_row[0]);
    }

    auto is_sc3_fast(const Code & code) -> VerificationReport
    {
        require_length3(code, "the forbidden-configuration separability test");
        auto fpc = is_fpc2_fast(code);
        if (! fpc.verdict) {
            const auto & w = std::get<FramingWitness>(*fpc.witness);
            auto bigger = w.coalition.members;
            bigger.push_back(w.framed);
            return negative(Property::SC, 3, Method::Fast, CollisionWitness{w.coalition, Coalition{std::move(bigger)}});
        }
        if (auto config = find_forbidden_config(code)) {
            auto report = negative(Property::SC, 3, Method::Fast, config->colliding_coalitions());
            report.configuration = std::move(config);
            return report;
        }
        return positive(Property::SC, 3, Method::Fast);
    }

    auto is_ssc3_fast(const Code & code) -> VerificationReport
    {
        require_length3(code, "the fast strong-separability test");
        if (code.alphabet() < 3)
            throw InvalidArgument("the fast 3-SSC test needs q >= 3 (q = " + std::to_string(code.alphabet())
                + "); use the definitional verifier");
        auto report = is_sc3_fast(code);
        report.property = Property::SSC;
        if (report.verdict)
            return report;

        // Two distinct coalitions with equal descendants: the one not contained
        // in the other is not recovered by the intersection.
        const auto & pair = std::get<CollisionWitness>(*report.witness);
        const bool first_inside = std::includes(pair.second.members.begin(), pair.second.members.end(),
            pair.first.members.begin(), pair.first.members.end());
        const auto & c0 = first_inside ? pair.second : pair.first;
        report.witness = SeparationWitness{c0, explained_intersection(code, c0)};
        return report;
    }

    auto witness_reproduces(const Code & code, const VerificationReport & report) -> bool
    {
        if (report.verdict || ! report.witness)
            return false;
        const auto t = report.t;
        auto fits = [&](const Coalition & c) {
            return ! c.empty() && c.size() <= t && c.members.back() < code.size();
        };
        return std::visit(
            [&](const auto & w) -> bool {
                using W = std::decay_t<decltype(w)>;
                if constexpr (std::is_same_v<W, CollisionWitness>) {
                    return fits(w.first) && fits(w.second) && w.first != w.second
                        && descendant(code, w.first) == descendant(code, w.second);
                }
                else if constexpr (std::is_same_v<W, FramingWitness>) {
                    return fits(w.coalition) && w.framed < code.size() && ! w.coalition.contains(w.framed)
                        && descendant(code, w.coalition).covers(code.column(w.framed));
                }
                else {
                    if (! fits(w.coalition))
                        return false;
                    // recompute the intersection over all subsets of desc ∩ C
                    const auto target = descendant(code, w.coalition);
                    const auto cand = descendant_members(code, target).members;
                    if (cand.size() > 24)
                        return false;
                    std::vector<std::uint32_t> inter = cand;
                    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cand.size()); ++mask) {
                        std::vector<std::uint32_t> subset;
                        for (std::size_t b = 0; b < cand.size(); ++b)
                            if ((mask >> b) & 1)
                                subset.push_back(cand[b]);
                        if (descendant(code, Coalition{subset}) == target) {
                            std::vector<std::uint32_t> next;
                            std::set_intersection(inter.begin(), inter.end(), subset.begin(), subset.end(),
                                std::back_inserter(next));
                            inter = std::move(next);
                        }
                    }
                    return inter == w.intersection.members && inter != w.coalition.members;
                }
            },
            *report.witness);
    }

    auto fast_method_applies(Property property, std::size_t t, const Code & code) -> bool
    {
        if (code.length() != 3)
            return false;
        switch (property) {
            case Property::FPC: return t == 2;
            case Property::SC: return t == 3;
            case Property::SSC: return t == 3 && code.alphabet() >= 3;
        }
        return false;
    }

    auto verify(const Code & code, Property property, std::size_t t, std::optional<Method> method,
        const VerifyOptions & options) -> VerificationReport
    {
        const bool fast = method ? *method == Method::Fast : fast_method_applies(property, t, code);
        if (fast && ! fast_method_applies(property, t, code))
            throw InvalidArgument("no fast verifier for " + to_string(property) + " with t = " + std::to_string(t)
                + " on this code (fast paths: FPC t=2, SC t=3, SSC t=3 with q>=3; all need n=3)");
        if (fast) {
            switch (property) {
                case Property::FPC: return is_fpc2_fast(code);
                case Property::SC: return is_sc3_fast(code);
                case Property::SSC: return is_ssc3_fast(code);
            }
        }
        switch (property) {
            case Property::FPC: return is_fpc(code, t, options);
            case Property::SC: return is_sc(code, t);
            case Property::SSC: return is_ssc(code, t, options);
        }
        throw InvalidArgument("unknown property");
    }
}
