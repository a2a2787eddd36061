#pragma once

// JSON views of results. Codeword indices are 1-based, matching the c1, c2, ...
// naming used in human-readable output.

#include <sscodes/bounds.hpp>
#include <sscodes/capset.hpp>
#include <sscodes/code.hpp>
#include <sscodes/construct.hpp>
#include <sscodes/search.hpp>
#include <sscodes/trace.hpp>
#include <sscodes/verify.hpp>

#include <json.hpp>

namespace sscodes
{
    auto to_json(const Coalition & c) -> nlohmann::json;
    auto to_json(const Code & code) -> nlohmann::json;
    auto to_json(const DescendantSet & d) -> nlohmann::json;
    auto to_json(const VerificationReport & report) -> nlohmann::json;
    auto to_json(const BoundReport & report) -> nlohmann::json;
    auto to_json(const SearchResult & result) -> nlohmann::json;
    auto to_json(const TraceResult & result) -> nlohmann::json;
    auto to_json(const CapSet & cap) -> nlohmann::json;
    auto to_json(const SscProvenance & provenance) -> nlohmann::json;
    auto to_json(const AdmissibilityReport & report) -> nlohmann::json;

    /// "{c1, c3}" style.
    auto describe(const Coalition & c) -> std::string;
    /// One line per fact, as printed by the command-line tool.
    auto describe(const VerificationReport & report) -> std::string;
}
