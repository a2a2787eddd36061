// Command-line front end. Exit codes: 0 success or verdict true, 1 verdict
// false or trace uncertified, 2 usage or input error, 3 resource cap hit.

#include <sscodes/bounds.hpp>
#include <sscodes/capset.hpp>
#include <sscodes/construct.hpp>
#include <sscodes/errors.hpp>
#include <sscodes/io.hpp>
#include <sscodes/json.hpp>
#include <sscodes/search.hpp>
#include <sscodes/trace.hpp>
#include <sscodes/verify.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using namespace sscodes;
using nlohmann::json;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_false = 1;
    constexpr int exit_usage = 2;
    constexpr int exit_resource = 3;

    auto print(const json & j) -> void { std::cout << j.dump(2) << '\n'; }

    auto field_of_order(std::uint64_t q) -> GaloisField
    {
        try {
            return GaloisField::of_order(q);
        }
        catch (const std::exception &) {
            throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
        }
    }

    struct Options
    {
        bool as_json = false;
        unsigned threads = 1;

        // construct
        std::uint64_t q = 0;
        std::optional<std::uint64_t> alpha;
        std::vector<std::uint64_t> subset;
        std::uint64_t q1 = 0;
        std::size_t n = 0;
        std::string cap_file;
        std::string out;

        // capset
        std::string order = "canonical";
        std::uint64_t seed = 0;
        std::uint64_t budget = 50'000'000;

        // verify / bounds / search / trace
        std::string property = "sc";
        std::size_t t = 0;
        std::string method;
        std::size_t subset_cap = 20;
        std::string code_file;
        std::string obs_file;
        std::optional<std::uint64_t> certified;
    };

    auto parse_property(const std::string & s) -> Property
    {
        static const std::map<std::string, Property> names{{"sc", Property::SC}, {"ssc", Property::SSC}, {"fpc", Property::FPC}};
        return names.at(s);
    }

    auto write_code(const Options & o, const Code & code) -> void
    {
        if (! o.out.empty())
            write_file_atomic(o.out, serialize_code(code));
    }

    auto run_construct_dm(const Options & o) -> int
    {
        const auto f = field_of_order(o.q);
        const auto alpha = o.alpha ? f.element(*o.alpha) : primitive_element(f);
        const auto dm = difference_matrix(f, alpha);
        const auto check = dm_validate(f, dm.rows);
        std::vector<FieldElement> subset;
        if (o.subset.empty())
            subset = f.elements();
        else
            for (auto x : o.subset)
                subset.push_back(f.element(x));
        const auto code = generate(restrict(dm, subset));
        const auto adm = admissible(f, subset, alpha);
        write_code(o, code);

        if (o.as_json) {
            json rows = json::array();
            for (const auto & r : dm.rows) {
                json row = json::array();
                for (const auto & x : r)
                    row.push_back(x.code());
                rows.push_back(row);
            }
            json out{{"field", f.describe()}, {"alpha", alpha.code()}, {"rows", rows}, {"valid", check.valid},
                {"admissibility", to_json(adm)}, {"code", to_json(code)}};
            print(out);
        }
        else {
            std::cout << "difference matrix over " << f.describe() << ", alpha = " << alpha.code() << '\n';
            for (const auto & r : dm.rows) {
                for (std::size_t i = 0; i < r.size(); ++i)
                    std::cout << (i ? " " : "") << r[i].code();
                std::cout << '\n';
            }
            std::cout << "valid: " << (check.valid ? "true" : "false") << '\n';
            std::cout << "admissible subset: " << (adm.admissible ? "true" : "false") << '\n';
            std::cout << "code: (3, " << code.size() << ", " << code.alphabet() << ")\n";
            if (o.out.empty())
                std::cout << serialize_code(code);
        }
        return check.valid ? exit_ok : exit_false;
    }

    auto run_construct_ssc(const Options & o) -> int
    {
        std::optional<CapSet> cap;
        if (! o.cap_file.empty())
            cap = parse_cap(read_file(o.cap_file));
        const auto built = build_ssc(o.q1, o.n, cap);
        write_code(o, built.code);
        const auto provenance = to_json(built.provenance);
        if (! o.out.empty())
            write_file_atomic(o.out + ".provenance.json", provenance.dump(2) + "\n");
        if (o.as_json)
            print(json{{"provenance", provenance}, {"code", to_json(built.code)}});
        else {
            std::cout << "code: (3, " << built.code.size() << ", " << built.code.alphabet() << ") from a cap of size "
                      << built.provenance.points.size() << " (" << built.provenance.cap_source << ")\n";
            if (o.out.empty())
                std::cout << serialize_code(built.code);
        }
        return exit_ok;
    }

    auto run_capset(const Options & o, bool exact) -> int
    {
        const auto base = field_of_order(o.q1);
        CapSet cap = [&] {
            if (exact)
                return capset_exact(base, o.n, o.budget);
            static const std::map<std::string, GreedyOrder> orders{
                {"canonical", GreedyOrder::Canonical}, {"parabola", GreedyOrder::Parabola}, {"random", GreedyOrder::Random}};
            return capset_greedy(base, o.n, orders.at(o.order), o.seed);
        }();
        if (! o.out.empty())
            write_file_atomic(o.out, serialize_cap(cap));
        if (o.as_json)
            print(to_json(cap));
        else {
            std::cout << "cap of size " << cap.points.size() << " in AG(" << o.n << ", " << o.q1 << ") [" << cap.source
                      << (cap.optimal ? ", optimal" : "") << "]\n";
            if (o.out.empty())
                std::cout << serialize_cap(cap);
        }
        return exact && ! cap.optimal ? exit_resource : exit_ok;
    }

    auto run_verify(const Options & o) -> int
    {
        const auto code = parse_code(read_file(o.code_file));
        std::optional<Method> method;
        if (o.method == "fast")
            method = Method::Fast;
        else if (o.method == "definitional")
            method = Method::Definitional;
        const auto report = verify(code, parse_property(o.property), o.t, method, {o.subset_cap, o.threads});
        if (o.as_json)
            print(to_json(report));
        else
            std::cout << describe(report);
        return report.verdict ? exit_ok : exit_false;
    }

    auto run_bounds(const Options & o) -> int
    {
        const auto report = bound_report(o.t, o.n, o.q, o.certified);
        if (o.as_json) {
            print(to_json(report));
            return exit_ok;
        }
        std::cout << "M(" << o.t << ", " << o.n << ", " << o.q << ")\n";
        if (report.best_lower)
            std::cout << "lower: " << report.best_lower->value << " (" << report.best_lower->source << ")\n";
        if (report.best_upper)
            std::cout << "upper: " << report.best_upper->value << " (" << report.best_upper->source << ")\n";
        for (const auto & e : report.all)
            std::cout << "  " << e.source << ": " << to_string(e.kind) << " " << e.value
                      << (e.conditional ? " [conditional]" : "") << (e.note.empty() ? "" : "  -- " + e.note) << '\n';
        for (const auto & a : report.annotations)
            std::cout << "  note: " << a << '\n';
        return exit_ok;
    }

    auto run_search(const Options & o) -> int
    {
        const auto result = search_optimal(o.t, o.n, o.q, parse_property(o.property), o.budget);
        if (result.witness)
            write_code(o, *result.witness);
        if (o.as_json)
            print(to_json(result));
        else {
            std::cout << "optimum: " << result.optimum << (result.exhaustive ? " (exhaustive)" : " (budget exhausted)")
                      << "\nnodes: " << result.nodes_explored << '\n';
            if (result.witness && o.out.empty())
                std::cout << serialize_code(*result.witness);
        }
        return result.exhaustive ? exit_ok : exit_resource;
    }

    auto run_trace(const Options & o) -> int
    {
        const auto code = parse_code(read_file(o.code_file));
        const auto obs = parse_observation(read_file(o.obs_file));
        const auto t = o.t == 0 ? code.size() : o.t;
        const auto result = trace(code, obs, t, o.subset_cap);
        if (o.as_json)
            print(to_json(result));
        else {
            std::cout << "candidates: " << describe(result.candidates) << '\n'
                      << "guilty: " << describe(result.guilty) << '\n'
                      << "certified: " << (result.certified ? "true" : "false") << '\n';
        }
        return result.certified ? exit_ok : exit_false;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Separable and strongly separable codes: construct, verify, bound, search and trace"};
    app.require_subcommand(1);
    Options o;

    auto json_flag = [&](CLI::App * sub) { sub->add_flag("--json", o.as_json, "Machine-readable output"); };
    auto check_property = CLI::IsMember({"sc", "ssc", "fpc"});

    auto * construct = app.add_subcommand("construct", "Build codes from difference matrices");
    construct->require_subcommand(1);
    auto * dm = construct->add_subcommand("dm", "Difference matrix over GF(q) and the code of a column subset");
    dm->add_option("--q", o.q, "Field order")->required();
    dm->add_option("--alpha", o.alpha, "Multiplier of the third row (element code); default primitive element");
    dm->add_option("--subset", o.subset, "Element codes selecting columns; default all")->delimiter(',');
    dm->add_option("--out", o.out, "Write the code file here");
    json_flag(dm);
    auto * ssc = construct->add_subcommand("ssc", "Length-3 separable code over GF(q1^n) from a cap set");
    ssc->add_option("--q1", o.q1, "Base field order, 1 mod 6")->required();
    ssc->add_option("--n", o.n, "Extension degree")->required();
    ssc->add_option("--cap-file", o.cap_file, "Cap set file; default greedy cap");
    ssc->add_option("--out", o.out, "Write the code file here (provenance goes to <out>.provenance.json)");
    json_flag(ssc);

    auto * capset = app.add_subcommand("capset", "Cap sets in AG(n, q1)");
    capset->require_subcommand(1);
    auto * greedy = capset->add_subcommand("greedy", "Greedy cap");
    auto * exact = capset->add_subcommand("exact", "Maximum cap by backtracking");
    for (auto * sub : {greedy, exact}) {
        sub->add_option("--q1", o.q1, "Field order")->required();
        sub->add_option("--n", o.n, "Dimension")->required();
        sub->add_option("--out", o.out, "Write the cap file here");
        json_flag(sub);
    }
    greedy->add_option("--order", o.order, "Scan order")->check(CLI::IsMember({"canonical", "parabola", "random"}));
    greedy->add_option("--seed", o.seed, "Seed for the random order");
    exact->add_option("--budget", o.budget, "Node budget");

    auto * verify_cmd = app.add_subcommand("verify", "Check FPC / SC / SSC");
    verify_cmd->add_option("--property", o.property, "sc, ssc or fpc")->required()->check(check_property);
    verify_cmd->add_option("--t", o.t, "Coalition size")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--method", o.method, "fast or definitional; default picks fast when it applies")
        ->check(CLI::IsMember({"fast", "definitional"}));
    verify_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--subset-cap", o.subset_cap, "Largest candidate set whose subsets are enumerated");
    verify_cmd->add_option("code", o.code_file, "Code file")->required();
    json_flag(verify_cmd);

    auto * bounds = app.add_subcommand("bounds", "Bounds on the largest strongly separable code");
    bounds->add_option("--t", o.t, "Coalition size")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--n", o.n, "Length")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--q", o.q, "Alphabet size")->required()->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
    bounds->add_option("--certified", o.certified, "Size of a verified construction, used as a lower bound");
    json_flag(bounds);

    auto * search = app.add_subcommand("search", "Exhaustive search for optimal codes");
    search->add_option("--t", o.t, "Coalition size")->required()->check(CLI::PositiveNumber);
    search->add_option("--n", o.n, "Length")->required()->check(CLI::PositiveNumber);
    search->add_option("--q", o.q, "Alphabet size")->required();
    search->add_option("--property", o.property, "sc, ssc or fpc")->required()->check(check_property);
    search->add_option("--budget", o.budget, "Node budget");
    search->add_option("--out", o.out, "Write the witness code here");
    json_flag(search);

    auto * trace_cmd = app.add_subcommand("trace", "Identify colluders from an observed descendant set");
    trace_cmd->add_option("--code", o.code_file, "Code file")->required();
    trace_cmd->add_option("--obs", o.obs_file, "Observation file")->required();
    trace_cmd->add_option("--t", o.t, "Largest coalition to certify; default unlimited");
    trace_cmd->add_option("--subset-cap", o.subset_cap, "Largest candidate set whose subsets are enumerated");
    json_flag(trace_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (dm->parsed())
            return run_construct_dm(o);
        if (ssc->parsed())
            return run_construct_ssc(o);
        if (greedy->parsed())
            return run_capset(o, false);
        if (exact->parsed())
            return run_capset(o, true);
        if (verify_cmd->parsed())
            return run_verify(o);
        if (bounds->parsed())
            return run_bounds(o);
        if (search->parsed())
            return run_search(o);
        if (trace_cmd->parsed())
            return run_trace(o);
    }
    catch (const ResourceLimit & e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_resource;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
