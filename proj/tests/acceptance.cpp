// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sscodes/bounds.hpp>
#include <sscodes/capset.hpp>
#include <sscodes/construct.hpp>
#include <sscodes/io.hpp>
#include <sscodes/search.hpp>
#include <sscodes/trace.hpp>
#include <sscodes/verify.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace sscodes;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::ostringstream detail;

        auto require(bool ok, const std::string & what) -> void
        {
            if (! ok) {
                if (pass)
                    detail << "failed: ";
                else
                    detail << "; ";
                detail << what;
                pass = false;
            }
        }
    };

    auto fixture(const std::string & name) -> Code
    {
        return parse_code(read_file(std::string(SSCODES_FIXTURES) + "/" + name));
    }

    auto seconds_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    // Corpus for the length-3 equivalences: every (3, M, 3) code with M <= 4,
    // then random (3, M, q) codes with q in {3, 4} and M <= 7.
    auto for_each_corpus_code(const std::function<void(const Code &)> & f) -> std::size_t
    {
        std::size_t count = 0;
        const auto words = oracle::all_words(3, 3);
        const int w = static_cast<int>(words.size());
        for (int a = 0; a < w; ++a) {
            f(Code{3, 3, std::vector<Word>{words[a]}});
            ++count;
            for (int b = a + 1; b < w; ++b) {
                f(Code{3, 3, {words[a], words[b]}});
                ++count;
                for (int c = b + 1; c < w; ++c) {
                    f(Code{3, 3, {words[a], words[b], words[c]}});
                    ++count;
                    for (int d = c + 1; d < w; ++d) {
                        f(Code{3, 3, {words[a], words[b], words[c], words[d]}});
                        ++count;
                    }
                }
            }
        }
        std::mt19937_64 rng{20240601};
        for (int trial = 0; trial < 10000; ++trial) {
            f(oracle::random_code(rng, 3, 2 + static_cast<std::size_t>(trial % 6), 3 + static_cast<std::size_t>(trial % 2)));
            ++count;
        }
        return count;
    }

    auto criterion1(Outcome & o) -> void
    {
        const auto ex1 = fixture("example1.code");
        const auto ex2 = fixture("example2.code");
        const auto ex3 = fixture("example3.code");
        const auto dm = fixture("dm3.code");
        o.require(is_ssc(ex1, 2).verdict, "example 1 should be 2-SSC");
        o.require(! is_fpc(ex1, 2).verdict, "example 1 should not be 2-FPC");
        o.require(is_sc(ex2, 2).verdict, "example 2 should be 2-SC");
        const auto ssc2 = is_ssc(ex2, 2);
        o.require(! ssc2.verdict, "example 2 should not be 2-SSC");
        if (! ssc2.verdict)
            o.require(std::get<SeparationWitness>(*ssc2.witness).coalition == Coalition{0, 4}, "example 2 witness is {c1,c5}");
        o.require(is_sc(ex3, 3).verdict && is_ssc(ex3, 3).verdict, "example 3 should be 3-SC and 3-SSC");
        o.require(is_fpc(dm, 2).verdict, "DM code should be 2-FPC");
        const auto sc3 = is_sc(dm, 3);
        o.require(! sc3.verdict, "DM code should not be 3-SC");
        if (! sc3.verdict) {
            const auto w = std::get<CollisionWitness>(*sc3.witness);
            o.require(w.first == Coalition{0, 3, 6} && w.second == Coalition{1, 4, 7}, "DM witness pair");
        }
    }

    auto criterion2(Outcome & o) -> void
    {
        std::size_t disagreements = 0;
        const auto count = for_each_corpus_code([&](const Code & code) {
            const bool fast = is_sc3_fast(code).verdict;
            if (fast != is_sc(code, 3).verdict || fast != oracle::is_sc(code, 3))
                ++disagreements;
        });
        o.detail << count << " codes, " << disagreements << " disagreements";
        o.require(disagreements == 0, "fast and definitional 3-SC checks disagree");
    }

    auto criterion3(Outcome & o) -> void
    {
        std::size_t disagreements = 0;
        const auto count = for_each_corpus_code([&](const Code & code) {
            const bool sc = oracle::is_sc(code, 3);
            if (is_ssc(code, 3).verdict != sc || is_ssc3_fast(code).verdict != sc)
                ++disagreements;
        });
        o.detail << count << " codes, " << disagreements << " disagreements";
        o.require(disagreements == 0, "3-SSC and 3-SC disagree");
    }

    auto criterion4(Outcome & o) -> void
    {
        std::size_t disagreements = 0;
        const auto count = for_each_corpus_code([&](const Code & code) {
            const bool fast = is_fpc2_fast(code).verdict;
            if (fast != is_fpc(code, 2).verdict || fast != oracle::is_fpc(code, 2))
                ++disagreements;
        });
        o.detail << count << " codes, " << disagreements << " disagreements";
        o.require(disagreements == 0, "fast and definitional 2-FPC checks disagree");
    }

    auto criterion5(Outcome & o) -> void
    {
        std::mt19937_64 rng{55};
        std::size_t violations = 0;
        const int trials = 10000;
        for (int trial = 0; trial < trials; ++trial) {
            const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
            const std::size_t q = 2 + static_cast<std::size_t>((trial / 3) % 3);
            const auto m = std::min<std::size_t>(2 + static_cast<std::size_t>(trial % 5), n == 2 ? q * q : 6);
            const auto code = oracle::random_code(rng, n, m, q);
            std::vector<bool> fpc(4), sc(4), ssc(4);
            for (std::size_t t = 1; t <= 3; ++t) {
                fpc[t] = oracle::is_fpc(code, t);
                sc[t] = oracle::is_sc(code, t);
                ssc[t] = oracle::is_ssc(code, t);
                if (fpc[t] && ! ssc[t])
                    ++violations; // frameproof implies strongly separable
                if (ssc[t] && ! sc[t])
                    ++violations; // strongly separable implies separable
                if (t >= 2 && sc[t] && ! fpc[t - 1])
                    ++violations; // t-separable implies (t-1)-frameproof
            }
        }
        std::size_t length_two = 0, mismatches = 0;
        for (std::size_t q : {2, 3}) {
            const auto words = oracle::all_words(2, q);
            const int w = static_cast<int>(words.size());
            for (std::uint32_t mask = 1; mask < (1u << w); ++mask) {
                if (__builtin_popcount(mask) > 5)
                    continue;
                std::vector<Word> chosen;
                for (int b = 0; b < w; ++b)
                    if ((mask >> b) & 1)
                        chosen.push_back(words[b]);
                const Code code{2, q, chosen};
                ++length_two;
                if (oracle::is_ssc(code, 2) != oracle::is_sc(code, 2))
                    ++mismatches;
            }
        }
        o.detail << trials << " random codes, " << violations << " violations; " << length_two << " length-2 codes, "
                 << mismatches << " SSC/SC mismatches";
        o.require(violations == 0 && mismatches == 0, "implication violated");
    }

    auto criterion6(Outcome & o) -> void
    {
        const auto f7 = GaloisField::of_order(7);
        const auto start = std::chrono::steady_clock::now();
        const auto small = build_ssc(7, 1, CapSet{f7, 1, {VectorElement{{0}}, VectorElement{{1}}}, "file", false});
        o.require(small.code.length() == 3 && small.code.size() == 14 && small.code.alphabet() == 7, "(3,14,7) shape");
        o.require(is_sc(small.code, 3).verdict, "(3,14,7) code should be 3-SC");
        o.require(is_ssc(small.code, 3).verdict, "(3,14,7) code should be 3-SSC");
        const auto small_time = seconds_since(start);
        o.require(small_time < 1.0, "(3,14,7) checks took over 1 s");

        const auto big_start = std::chrono::steady_clock::now();
        const auto cap = capset_greedy(f7, 2, GreedyOrder::Parabola);
        std::vector<VectorElement> parabola(cap.points.begin(), cap.points.begin() + 7);
        const auto big = build_ssc(7, 2, CapSet{f7, 2, parabola, "parabola", false});
        o.require(big.code.size() == 343 && big.code.alphabet() == 49, "(3,343,49) shape");
        o.require(is_sc3_fast(big.code).verdict, "(3,343,49) code should pass the fast 3-SC check");
        const auto big_time = seconds_since(big_start);
        o.require(big_time < 300.0, "(3,343,49) check took over 5 min");
        o.detail << (o.pass ? "" : "; ") << "(3,14,7) in " << small_time << " s, (3,343,49) in " << big_time << " s";
    }

    // Pinned backtracking written independently of the library: any cap with
    // three points maps affinely onto one containing (0,0), (1,0), (0,1).
    auto oracle_max_cap_plane(unsigned p) -> std::size_t
    {
        std::vector<std::vector<unsigned>> pts;
        for (const auto & w : oracle::all_words(2, p))
            pts.push_back({w.begin(), w.end()});
        auto index = [&](unsigned x, unsigned y) { return static_cast<int>(x * p + y); };
        std::vector<int> chosen{index(0, 0), index(0, 1), index(1, 0)};
        std::size_t best = 3;
        std::function<void(int)> extend = [&](int from) {
            best = std::max(best, chosen.size());
            for (int c = from; c < static_cast<int>(pts.size()); ++c) {
                if (std::find(chosen.begin(), chosen.end(), c) != chosen.end())
                    continue;
                bool ok = true;
                for (std::size_t a = 0; a < chosen.size() && ok; ++a)
                    for (std::size_t b = a + 1; b < chosen.size() && ok; ++b)
                        ok = ! oracle::collinear_prime(p, pts[chosen[a]], pts[chosen[b]], pts[c]);
                if (! ok)
                    continue;
                chosen.push_back(c);
                extend(c + 1);
                chosen.pop_back();
            }
        };
        extend(0);
        return best;
    }

    auto criterion7(Outcome & o) -> void
    {
        const auto f7 = GaloisField::of_order(7);
        const auto cap = capset_exact(f7, 2);
        const auto oracle_size = oracle_max_cap_plane(7);
        o.require(cap.optimal && cap.points.size() == 8, "exact cap in AG(2,7) should have size 8");
        o.require(oracle_size == cap.points.size(), "backtracking oracle disagrees on the maximum cap size");
        const auto built = build_ssc(7, 2, cap);
        const auto m = built.code.size();
        o.require(m == 49 * cap.points.size(), "M should be 49 |S|");
        o.require(is_sc3_fast(built.code).verdict, "the size-392 code should be 3-SC");
        const auto b = bound_33(49);
        o.require(b.lower == 343 && b.upper == 1800, "bound pair for q = 49");
        o.require(m >= b.lower && m <= b.upper, "M outside the envelope");
        const auto report = bound_report(3, 3, 49, m);
        o.require(report.best_lower && report.best_lower->value == m, "certified lower bound not selected");
        o.detail << (o.pass ? "" : "; ") << "M = " << m << " (cap " << cap.points.size() << ", oracle " << oracle_size
                 << "), envelope [" << b.lower << ", " << b.upper << "]";
    }

    auto criterion8(Outcome & o) -> void
    {
        // independent evaluations of the closed forms
        auto floor_sqrt = [](std::uint64_t x) {
            std::uint64_t r = 0;
            while ((r + 1) * (r + 1) <= x)
                ++r;
            return r;
        };
        const auto b4 = bound_33(4), b9 = bound_33(9);
        o.require(b4.lower == 8 && b4.upper == 12, "bound_33(4) = (8, 12)");
        o.require(b9.lower == 27 && b9.upper == 60, "bound_33(9) = (27, 60)");
        const auto r4 = floor_sqrt(4), r9 = floor_sqrt(9);
        o.require(b4.lower == r4 * r4 * r4 && b4.upper == 3 * 16 / 4, "bound_33(4) re-evaluation");
        o.require(b9.lower == r9 * r9 * r9 && b9.upper == 3 * 81 / 4, "bound_33(9) re-evaluation");

        const auto b22 = bound_22(9);
        o.require(b22.value == 29 && b22.k == 3 && b22.t == 2, "bound_22(9) = 29 with (3, 2)");
        {
            // k = 3, q = k^2: t = floor((A - sqrt B) / 2), A = 29, B = 553
            const std::int64_t a = 29, bb = 553;
            std::int64_t t = a / 2;
            while ((a - 2 * t) < 0 || (a - 2 * t) * (a - 2 * t) < bb)
                --t;
            o.require(9 * 3 + t == 29, "bound_22(9) re-evaluation");
        }
        o.require(bound_22(6).value == 16 && 6 * 2 + 2 * 2 == 16, "bound_22(6) = 16");
        const auto sc = bound_sc_upper(3, 3, 5);
        // r = 3 mod 2 = 1: max{5^2, 1 (5^2 - 1) + 1 (5^1 - 1)}
        o.require(sc == 28 && std::max<std::uint64_t>(25, 24 + 4) == 28, "bound_sc_upper(3,3,5) = 28");
        const auto small = bound_small_n(4, 3, 5);
        o.require(small.value == 12 && small.exact && 3 * (5 - 1) == 12, "bound_small_n(4,3,5) = 12");
    }

    auto criterion9(Outcome & o) -> void
    {
        const auto start = std::chrono::steady_clock::now();
        const auto sc = search_optimal(3, 3, 2, Property::SC);
        o.require(sc.exhaustive && sc.optimum == 3, "SC search optimum 3, exhaustive");
        o.require(sc.witness && isomorph_canonical(*sc.witness) == isomorph_canonical(fixture("example3.code")),
            "SC witness equivalent to example 3");
        const auto ssc = search_optimal(3, 3, 2, Property::SSC);
        o.require(ssc.exhaustive, "SSC search exhaustive");
        const auto elapsed = seconds_since(start);
        o.require(elapsed < 60.0, "searches took over 1 min");
        o.detail << (o.pass ? "" : "; ") << "SC optimum " << sc.optimum << ", SSC optimum " << ssc.optimum << " ("
                 << sc.nodes_explored + ssc.nodes_explored << " nodes, " << elapsed << " s)";
    }

    auto criterion10(Outcome & o) -> void
    {
        std::size_t traced = 0, failures = 0;
        auto all = [&](const Code & code, std::size_t t) {
            for (const auto & s : oracle::subsets(static_cast<int>(code.size()), t)) {
                const Coalition c0{std::vector<std::uint32_t>(s.begin(), s.end())};
                const auto r = trace(code, descendant(code, c0), t);
                ++traced;
                if (r.guilty != c0 || ! r.certified || r.visits != code.size())
                    ++failures;
            }
        };
        all(fixture("example1.code"), 2);
        all(build_ssc(7, 1).code, 3);
        const auto ex2 = fixture("example2.code");
        const auto r = trace(ex2, parse_observation(read_file(std::string(SSCODES_FIXTURES) + "/example2_all.obs")), 2);
        o.require(r.guilty.empty() && ! r.certified, "example 2 observation should be uncertified with no guilty");
        o.require(r.visits == ex2.size(), "candidate filter visits");
        o.require(failures == 0, "some coalition was not recovered");
        o.detail << (o.pass ? "" : "; ") << traced << " coalitions traced, " << failures << " failures";
    }

    auto criterion11(Outcome & o) -> void
    {
        struct Case
        {
            unsigned q;
            std::size_t dim;
            std::size_t expected;
        };
        for (const auto & c : {Case{3, 2, 4}, Case{5, 2, 6}, Case{3, 1, 2}, Case{5, 1, 2}, Case{7, 1, 2}, Case{13, 1, 2}}) {
            const auto cap = capset_exact(GaloisField::of_order(c.q), c.dim);
            const auto brute = oracle::max_cap_size(c.q, c.dim);
            const auto label = "AG(" + std::to_string(c.dim) + "," + std::to_string(c.q) + ")";
            o.require(cap.points.size() == c.expected && cap.optimal, label + " exact size");
            o.require(brute == c.expected, label + " brute-force size");
            o.detail << (o.detail.tellp() > 0 && o.pass ? ", " : "") << (o.pass ? label + "=" + std::to_string(brute) : "");
        }
    }
}

auto main() -> int
{
    const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria{
        {"worked examples", criterion1},
        {"fast 3-SC check matches definition", criterion2},
        {"3-SSC equals 3-SC for q >= 3", criterion3},
        {"fast 2-FPC check matches definition", criterion4},
        {"implication lattice", criterion5},
        {"construction soundness", criterion6},
        {"length-3 envelope at q = 49", criterion7},
        {"bound values", criterion8},
        {"exhaustive search", criterion9},
        {"tracing completeness", criterion10},
        {"cap set sizes", criterion11},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        }
        catch (const std::exception & e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        const auto elapsed = seconds_since(start);
        failed += o.pass ? 0 : 1;
        std::printf("[%s] criterion %zu: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
            elapsed, o.detail.str().empty() ? "" : " -- ", o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
