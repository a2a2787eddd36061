// Thin Python surface: text in (code / cap / observation files), JSON text out.
// The Python package decodes the JSON into dicts.

#include <sscodes/bounds.hpp>
#include <sscodes/capset.hpp>
#include <sscodes/construct.hpp>
#include <sscodes/errors.hpp>
#include <sscodes/json.hpp>
#include <sscodes/search.hpp>
#include <sscodes/trace.hpp>
#include <sscodes/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

namespace py = pybind11;
using namespace sscodes;

namespace
{
    auto parse_property(const std::string & s) -> Property
    {
        static const std::map<std::string, Property> names{{"sc", Property::SC}, {"ssc", Property::SSC}, {"fpc", Property::FPC}};
        const auto it = names.find(s);
        if (it == names.end())
            throw InvalidArgument("property must be sc, ssc or fpc");
        return it->second;
    }

    auto verify_json(const std::string & code_text, const std::string & property, std::size_t t,
        std::optional<std::string> method, unsigned threads) -> std::string
    {
        std::optional<Method> m;
        if (method == "fast")
            m = Method::Fast;
        else if (method == "definitional")
            m = Method::Definitional;
        else if (method)
            throw InvalidArgument("method must be fast or definitional");
        return to_json(verify(parse_code(code_text), parse_property(property), t, m, {20, threads})).dump();
    }

    auto build_ssc_json(std::uint64_t q1, std::size_t n, std::optional<std::string> cap_text) -> std::string
    {
        std::optional<CapSet> cap;
        if (cap_text)
            cap = parse_cap(*cap_text);
        const auto built = build_ssc(q1, n, cap);
        nlohmann::json out{{"provenance", to_json(built.provenance)}, {"code", serialize_code(built.code)}};
        return out.dump();
    }

    auto capset_json(std::uint64_t q1, std::size_t n, const std::string & method, std::uint64_t seed,
        std::uint64_t budget) -> std::string
    {
        const auto base = GaloisField::of_order(q1);
        if (method == "exact")
            return to_json(capset_exact(base, n, budget)).dump();
        static const std::map<std::string, GreedyOrder> orders{
            {"canonical", GreedyOrder::Canonical}, {"parabola", GreedyOrder::Parabola}, {"random", GreedyOrder::Random}};
        const auto it = orders.find(method);
        if (it == orders.end())
            throw InvalidArgument("method must be exact, canonical, parabola or random");
        return to_json(capset_greedy(base, n, it->second, seed)).dump();
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Separable and strongly separable codes";

    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

    m.def("verify_json", &verify_json, py::arg("code"), py::arg("property"), py::arg("t"),
        py::arg("method") = std::nullopt, py::arg("threads") = 1u);
    m.def(
        "bounds_json",
        [](std::size_t t, std::size_t n, std::uint64_t q, std::optional<std::uint64_t> certified) {
            return to_json(bound_report(t, n, q, certified)).dump();
        },
        py::arg("t"), py::arg("n"), py::arg("q"), py::arg("certified") = std::nullopt);
    m.def(
        "search_json",
        [](std::size_t t, std::size_t n, std::size_t q, const std::string & property, std::uint64_t budget) {
            return to_json(search_optimal(t, n, q, parse_property(property), budget)).dump();
        },
        py::arg("t"), py::arg("n"), py::arg("q"), py::arg("property"), py::arg("budget") = 50'000'000);
    m.def(
        "trace_json",
        [](const std::string & code_text, const std::string & obs_text, std::size_t t) {
            return to_json(trace(parse_code(code_text), parse_observation(obs_text), t)).dump();
        },
        py::arg("code"), py::arg("observation"), py::arg("t"));
    m.def("build_ssc_json", &build_ssc_json, py::arg("q1"), py::arg("n"), py::arg("cap") = std::nullopt);
    m.def("capset_json", &capset_json, py::arg("q1"), py::arg("n"), py::arg("method") = "canonical",
        py::arg("seed") = 0, py::arg("budget") = 50'000'000);
    m.def(
        "canonical_form", [](const std::string & code_text) { return serialize_code(isomorph_canonical(parse_code(code_text))); },
        py::arg("code"));
}
