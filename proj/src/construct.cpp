#include <sscodes/construct.hpp>
#include <sscodes/errors.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>

namespace sscodes
{
    namespace
    {
        auto check_alpha(const GaloisField & field, const FieldElement & alpha) -> void
        {
            if (! (alpha.field() == field))
                throw InvalidArgument("alpha does not belong to " + field.describe());
            if (alpha.is_zero() || alpha.is_one())
                throw InvalidArgument("alpha must differ from 0 and 1");
        }
    }

    auto difference_matrix(const GaloisField & field, const FieldElement & alpha) -> DifferenceMatrix
    {
        if (field.order() < 3)
            throw InvalidArgument("difference matrix needs q >= 3");
        check_alpha(field, alpha);
        const auto epsilon = primitive_element(field);
        std::vector<std::vector<FieldElement>> rows(3);
        rows[0].assign(field.order(), field.zero());
        rows[1].push_back(field.zero());
        auto power = field.one();
        for (std::uint64_t i = 0; i + 1 < field.order(); ++i) {
            rows[1].push_back(power);
            power = power * epsilon;
        }
        for (const auto & x : rows[1])
            rows[2].push_back(alpha * x);
        return DifferenceMatrix{field, std::move(rows), alpha};
    }

    auto dm_validate(const GaloisField & field, const std::vector<std::vector<FieldElement>> & rows) -> DmCheck
    {
        if (rows.size() != 3)
            throw InvalidArgument("difference matrix must have 3 rows");
        for (const auto & r : rows) {
            if (r.size() != field.order())
                throw InvalidArgument("difference matrix rows must have q = " + std::to_string(field.order()) + " entries");
            for (const auto & x : r)
                if (! (x.field() == field))
                    throw InvalidArgument("difference matrix entry outside " + field.describe());
        }
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t t = 0; t < 3; ++t) {
                if (s == t)
                    continue;
                std::vector<char> hit(field.order(), 0);
                for (std::size_t i = 0; i < field.order(); ++i)
                    hit[(rows[s][i] - rows[t][i]).code()] = 1;
                if (std::find(hit.begin(), hit.end(), 0) != hit.end())
                    return DmCheck{false, std::pair{s, t}};
            }
        return DmCheck{};
    }

    auto restrict(const DifferenceMatrix & dm, const std::vector<FieldElement> & subset) -> BaseMatrix
    {
        if (subset.empty())
            throw InvalidArgument("column subset must be nonempty");
        std::set<std::uint64_t> wanted;
        for (const auto & x : subset) {
            if (! (x.field() == dm.field))
                throw InvalidArgument("subset element outside " + dm.field.describe());
            wanted.insert(x.code());
        }
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < dm.rows[1].size(); ++i)
            if (wanted.contains(dm.rows[1][i].code()))
                keep.push_back(i);
        std::sort(keep.begin(), keep.end(),
            [&](std::size_t a, std::size_t b) { return dm.rows[1][a].code() < dm.rows[1][b].code(); });
        BaseMatrix base{dm.field, dm.alpha, {}};
        for (auto i : keep)
            base.columns.push_back({dm.rows[0][i], dm.rows[1][i], dm.rows[2][i]});
        return base;
    }

    auto generate(const BaseMatrix & base) -> Code
    {
        std::vector<Word> words;
        words.reserve(base.field.order() * base.columns.size());
        for (const auto & g : base.field.elements())
            for (const auto & column : base.columns) {
                Word w;
                for (const auto & x : column)
                    w.push_back(static_cast<Symbol>((x + g).code()));
                words.push_back(std::move(w));
            }
        return Code{3, base.field.order(), words};
    }

    auto admissible(const GaloisField & field, const std::vector<FieldElement> & subset, const FieldElement & alpha)
        -> AdmissibilityReport
    {
        check_alpha(field, alpha);
        std::vector<std::uint64_t> s;
        for (const auto & x : subset) {
            if (! (x.field() == field))
                throw InvalidArgument("subset element outside " + field.describe());
            s.push_back(x.code());
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        const std::unordered_set<std::uint64_t> in_s(s.begin(), s.end());

        const auto & f = field;
        const auto a = alpha.code();
        const auto a1 = f.sub(a, 1);                      // alpha - 1
        const auto a_inv = f.inv(a);
        const auto h = f.add(f.sub(f.mul(a, a), a), 1);   // alpha^2 - alpha + 1
        const auto aa1 = f.mul(a, a1);                    // alpha (alpha - 1)

        AdmissibilityReport report;
        report.used_reduction = h == 0;

        // x + (alpha-1) w = alpha y with x, y, w distinct
        for (auto x : s)
            for (auto w : s) {
                if (x == w)
                    continue;
                const auto y = f.mul(f.add(x, f.mul(a1, w)), a_inv);
                if (y != x && y != w && in_s.contains(y)) {
                    report.admissible = false;
                    report.witness = AdmissibilityWitness{"triangle", {{"x", x}, {"y", y}, {"w", w}}};
                    return report;
                }
            }
        if (report.used_reduction)
            return report;

        // alpha x + alpha(alpha-1) z = (alpha-1) y + h u
        // alpha w + alpha(alpha-1) u = (alpha-1) v + h z
        // When h != 0 only the all-distinct pattern can occur: a repeated side
        // x = y = z forces h u = h z, i.e. u = z.
        std::vector<std::pair<std::uint64_t, std::uint64_t>> first, second;
        for (auto z : s)
            for (auto u : s) {
                if (z == u)
                    continue;
                const auto r1 = f.sub(f.mul(h, u), f.mul(aa1, z));
                const auto r2 = f.sub(f.mul(h, z), f.mul(aa1, u));
                first.clear();
                second.clear();
                for (auto t : s) {
                    const auto x = f.mul(f.add(r1, f.mul(a1, t)), a_inv); // y = t
                    if (in_s.contains(x))
                        first.emplace_back(x, t);
                    const auto w = f.mul(f.add(r2, f.mul(a1, t)), a_inv); // v = t
                    if (in_s.contains(w))
                        second.emplace_back(t, w);
                }
                for (auto [x, y] : first) {
                    if (x == y || x == z || y == z || x == u || y == u)
                        continue;
                    // at most 9 entries of `second` can clash with {x, y, z, u}
                    for (auto [v, w] : second) {
                        std::array<std::uint64_t, 6> all{x, y, z, u, v, w};
                        std::sort(all.begin(), all.end());
                        if (std::adjacent_find(all.begin(), all.end()) != all.end())
                            continue;
                        report.admissible = false;
                        report.witness = AdmissibilityWitness{"nabla",
                            {{"x", x}, {"y", y}, {"z", z}, {"u", u}, {"v", v}, {"w", w}}};
                        return report;
                    }
                }
            }
        return report;
    }

    auto build_ssc(std::uint64_t q1, std::size_t n, const std::optional<CapSet> & cap) -> SscBuild
    {
        if (q1 % 6 != 1)
            throw InvalidArgument("q1 = " + std::to_string(q1) + " is not 1 mod 6, so GF(q1) has no primitive sixth root of unity");
        if (n == 0)
            throw InvalidArgument("dimension n must be positive");
        const auto base = GaloisField::of_order(q1);
        std::uint64_t q = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (q > (std::uint64_t{1} << 22) / q1)
                throw ResourceLimit("q1^n is too large for the construction");
            q *= q1;
        }
        const auto big = GaloisField::of_order(q);

        CapSet s = cap ? *cap : capset_greedy(base, n);
        if (! (s.base == base) || s.dim != n)
            throw InvalidArgument("cap does not live in F_" + std::to_string(q1) + "^" + std::to_string(n));
        if (s.points.empty())
            throw InvalidArgument("cap is empty");
        {
            std::set<VectorElement> distinct(s.points.begin(), s.points.end());
            if (distinct.size() != s.points.size())
                throw InvalidArgument("cap lists a point twice");
        }
        if (auto triple = find_collinear_triple(s))
            throw InvalidArgument("cap points " + std::to_string((*triple)[0] + 1) + ", " + std::to_string((*triple)[1] + 1)
                + ", " + std::to_string((*triple)[2] + 1) + " are collinear");

        const VectorView view{big, base};
        const auto alpha_base = sixth_root_of_unity(base);
        const auto alpha = view.embed(alpha_base);
        std::vector<FieldElement> subset;
        for (const auto & p : s.points)
            subset.push_back(view.from_vector(p));

        auto code = generate(restrict(difference_matrix(big, alpha), subset));

        SscProvenance prov;
        prov.q1 = q1;
        prov.n = n;
        prov.q = q;
        prov.alpha_base = alpha_base.code();
        prov.alpha_big = alpha.code();
        prov.points = s.points;
        for (const auto & x : subset)
            prov.subset.push_back(x.code());
        prov.m = code.size();
        prov.cap_source = s.source;
        prov.cap_optimal = s.optimal;
        return SscBuild{std::move(code), std::move(prov)};
    }
}
