#pragma once

// Frameproof (FPC), separable (SC) and strongly separable (SSC) verifiers.
//
// The definitional verifiers enumerate coalitions straight from the
// definitions and serve as oracles. The fast verifiers apply only to length-3
// codes: 2-frameproofness through the A-set intersection criterion, 3-bar
// separability through 2-frameproofness plus the absence of the four
// forbidden configurations, and 3-bar strong separability through its
// equivalence with 3-bar separability for q >= 3.

#include <sscodes/code.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sscodes
{
    enum class Property
    {
        FPC,
        SC,
        SSC
    };

    enum class Method
    {
        Definitional,
        Fast
    };

    auto to_string(Property p) -> std::string;
    auto to_string(Method m) -> std::string;

    /// Two distinct coalitions of size <= t with equal descendants.
    struct CollisionWitness
    {
        Coalition first;
        Coalition second;
    };

    /// A codeword outside `coalition` that lies in desc(coalition).
    struct FramingWitness
    {
        Coalition coalition;
        std::uint32_t framed = 0;
    };

    /// A coalition whose explaining subsets intersect to something else.
    struct SeparationWitness
    {
        Coalition coalition;
        Coalition intersection;
    };

    using Witness = std::variant<CollisionWitness, FramingWitness, SeparationWitness>;

    enum class ConfigKind
    {
        Delta1,
        Delta2,
        Delta3,
        Nabla
    };

    auto to_string(ConfigKind k) -> std::string;

    /// Columns are in the pattern's column order; bindings name the pattern
    /// letters (a..g for the Delta patterns, a1..c3 for Nabla).
    struct ForbiddenConfigWitness
    {
        ConfigKind kind = ConfigKind::Delta1;
        std::vector<std::uint32_t> columns;
        std::vector<std::pair<std::string, Symbol>> bindings;

        /// The two 3-coalitions with equal descendants that the pattern encodes.
        auto colliding_coalitions() const -> CollisionWitness;
    };

    struct VerificationReport
    {
        Property property = Property::SC;
        std::size_t t = 0;
        Method method = Method::Definitional;
        bool verdict = true;
        std::optional<Witness> witness;
        std::optional<ForbiddenConfigWitness> configuration;
    };

    struct VerifyOptions
    {
        /// Largest desc(C0) ∩ C whose subsets the SSC check will enumerate.
        std::size_t subset_cap = 20;
        /// Worker threads for coalition enumeration (FPC and SSC checks).
        unsigned threads = 1;
    };

    auto is_fpc(const Code & code, std::size_t t, const VerifyOptions & options = {}) -> VerificationReport;
    auto is_sc(const Code & code, std::size_t t) -> VerificationReport;
    /// Throws ResourceLimit if some desc(C0) ∩ C exceeds the subset cap.
    auto is_ssc(const Code & code, std::size_t t, const VerifyOptions & options = {}) -> VerificationReport;

    auto is_fpc2_fast(const Code & code) -> VerificationReport;
    auto find_forbidden_config(const Code & code) -> std::optional<ForbiddenConfigWitness>;
    auto is_sc3_fast(const Code & code) -> VerificationReport;
    /// Refuses q < 3 with InvalidArgument: the equivalence is only known for q >= 3.
    auto is_ssc3_fast(const Code & code) -> VerificationReport;

    /// Intersection of every C' ⊆ C with desc(C') = desc(C0). By monotonicity of
    /// desc, c ∈ C0 survives iff desc(D \ {c}) differs from desc(C0), where
    /// D = desc(C0) ∩ C; no subset enumeration is needed.
    auto explained_intersection(const Code & code, const Coalition & c0) -> Coalition;

    /// Re-evaluates a negative report's witness against the definitions.
    auto witness_reproduces(const Code & code, const VerificationReport & report) -> bool;

    /// Whether the fast path's hypotheses hold for (property, t, code).
    auto fast_method_applies(Property property, std::size_t t, const Code & code) -> bool;

    auto verify(const Code & code, Property property, std::size_t t, std::optional<Method> method = std::nullopt,
        const VerifyOptions & options = {}) -> VerificationReport;
}
