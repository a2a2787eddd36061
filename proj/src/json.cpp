#include <sscodes/json.hpp>

#include <sstream>

namespace sscodes
{
    using nlohmann::json;

    auto to_json(const Coalition & c) -> json
    {
        json out = json::array();
        for (auto m : c.members)
            out.push_back(m + 1);
        return out;
    }

    auto to_json(const Code & code) -> json
    {
        json rows = json::array();
        for (std::size_t i = 0; i < code.length(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < code.size(); ++j)
                row.push_back(code.at(i, j));
            rows.push_back(std::move(row));
        }
        return {{"n", code.length()}, {"M", code.size()}, {"q", code.alphabet()}, {"rows", rows}};
    }

    auto to_json(const DescendantSet & d) -> json
    {
        json sets = json::array();
        for (const auto & s : d.sets())
            sets.push_back(s.values());
        return sets;
    }

    auto to_json(const VerificationReport & report) -> json
    {
        json out{{"property", to_string(report.property)}, {"t", report.t}, {"method", to_string(report.method)},
            {"verdict", report.verdict}};
        if (report.witness) {
            std::visit(
                [&](const auto & w) {
                    using W = std::decay_t<decltype(w)>;
                    if constexpr (std::is_same_v<W, CollisionWitness>)
                        out["witness"] = {{"type", "collision"}, {"first", to_json(w.first)}, {"second", to_json(w.second)}};
                    else if constexpr (std::is_same_v<W, FramingWitness>)
                        out["witness"] = {{"type", "framing"}, {"coalition", to_json(w.coalition)}, {"framed", w.framed + 1}};
                    else
                        out["witness"] = {{"type", "separation"}, {"coalition", to_json(w.coalition)},
                            {"intersection", to_json(w.intersection)}};
                },
                *report.witness);
        }
        if (report.configuration) {
            const auto & c = *report.configuration;
            json cols = json::array();
            for (auto j : c.columns)
                cols.push_back(j + 1);
            json bindings = json::object();
            for (const auto & [name, value] : c.bindings)
                bindings[name] = value;
            out["configuration"] = {{"kind", to_string(c.kind)}, {"columns", cols}, {"bindings", bindings}};
        }
        return out;
    }

    namespace
    {
        auto entry_json(const BoundEntry & e) -> json
        {
            return {{"source", e.source}, {"kind", to_string(e.kind)}, {"value", e.value}, {"note", e.note},
                {"conditional", e.conditional}};
        }
    }

    auto to_json(const BoundReport & report) -> json
    {
        json out{{"params", {{"t", report.t}, {"n", report.n}, {"q", report.q}}}};
        out["best_lower"] = report.best_lower ? json{{"value", report.best_lower->value}, {"source", report.best_lower->source}}
                                              : json(nullptr);
        out["best_upper"] = report.best_upper ? json{{"value", report.best_upper->value}, {"source", report.best_upper->source}}
                                              : json(nullptr);
        json all = json::array();
        for (const auto & e : report.all)
            all.push_back(entry_json(e));
        out["all"] = all;
        out["annotations"] = report.annotations;
        return out;
    }

    auto to_json(const SearchResult & result) -> json
    {
        json out{{"t", result.t}, {"n", result.n}, {"q", result.q}, {"property", to_string(result.property)},
            {"optimum", result.optimum}, {"nodes_explored", result.nodes_explored}, {"exhaustive", result.exhaustive}};
        out["witness"] = result.witness ? to_json(*result.witness) : json(nullptr);
        return out;
    }

    auto to_json(const TraceResult & result) -> json
    {
        return {{"guilty", to_json(result.guilty)}, {"candidates", to_json(result.candidates)},
            {"certified", result.certified}, {"visits", result.visits}};
    }

    auto to_json(const CapSet & cap) -> json
    {
        json points = json::array();
        for (const auto & p : cap.points)
            points.push_back(p.components);
        return {{"q1", cap.base.order()}, {"n", cap.dim}, {"size", cap.points.size()}, {"source", cap.source},
            {"optimal", cap.optimal}, {"points", points}};
    }

    auto to_json(const SscProvenance & p) -> json
    {
        json points = json::array();
        for (const auto & v : p.points)
            points.push_back(v.components);
        return {{"q1", p.q1}, {"n", p.n}, {"q", p.q}, {"alpha_base", p.alpha_base}, {"alpha", p.alpha_big},
            {"cap_size", p.points.size()}, {"cap_points", points}, {"subset", p.subset}, {"M", p.m},
            {"cap_source", p.cap_source}, {"cap_optimal", p.cap_optimal}};
    }

    auto to_json(const AdmissibilityReport & report) -> json
    {
        json out{{"admissible", report.admissible}, {"used_reduction", report.used_reduction}};
        if (report.witness) {
            json values = json::object();
            for (const auto & [name, value] : report.witness->values)
                values[name] = value;
            out["witness"] = {{"kind", report.witness->kind}, {"values", values}};
        }
        return out;
    }

    auto describe(const Coalition & c) -> std::string
    {
        std::string out = "{";
        for (std::size_t i = 0; i < c.members.size(); ++i)
            out += (i ? ", c" : "c") + std::to_string(c.members[i] + 1);
        return out + "}";
    }

    auto describe(const VerificationReport & report) -> std::string
    {
        std::ostringstream out;
        out << to_string(report.property) << " t=" << report.t << " (" << to_string(report.method)
            << "): " << (report.verdict ? "true" : "false") << '\n';
        if (report.witness) {
            std::visit(
                [&](const auto & w) {
                    using W = std::decay_t<decltype(w)>;
                    if constexpr (std::is_same_v<W, CollisionWitness>)
                        out << "witness: desc" << describe(w.first) << " = desc" << describe(w.second) << '\n';
                    else if constexpr (std::is_same_v<W, FramingWitness>)
                        out << "witness: " << describe(w.coalition) << " frames c" << w.framed + 1 << '\n';
                    else
                        out << "witness: coalition " << describe(w.coalition) << ", intersection of explaining sets "
                            << describe(w.intersection) << '\n';
                },
                *report.witness);
        }
        if (report.configuration) {
            out << "configuration: " << to_string(report.configuration->kind) << " on columns";
            for (auto j : report.configuration->columns)
                out << " c" << j + 1;
            out << '\n';
        }
        return out.str();
    }
}
