#pragma once

// Difference-matrix construction of length-3 separable codes: a (q,3,1)
// difference matrix D, its restriction N = D|_S to a column subset, and the
// code of all translates N + g.

#include <sscodes/capset.hpp>
#include <sscodes/code.hpp>
#include <sscodes/field.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sscodes
{
    struct DifferenceMatrix
    {
        GaloisField field;
        /// Three rows of q entries.
        std::vector<std::vector<FieldElement>> rows;
        FieldElement alpha;
    };

    /// Rows 0, (0, 1, e, ..., e^(q-2)) with e primitive, and alpha times the second.
    auto difference_matrix(const GaloisField & field, const FieldElement & alpha) -> DifferenceMatrix;

    struct DmCheck
    {
        bool valid = true;
        /// First ordered row pair whose differences miss some element.
        std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    };

    auto dm_validate(const GaloisField & field, const std::vector<std::vector<FieldElement>> & rows) -> DmCheck;

    /// Columns (0, x, alpha x) for x in S, ordered by x.
    struct BaseMatrix
    {
        GaloisField field;
        FieldElement alpha;
        std::vector<std::vector<FieldElement>> columns;
    };

    auto restrict(const DifferenceMatrix & dm, const std::vector<FieldElement> & subset) -> BaseMatrix;

    /// All translates: for g in F_q (canonical order), for each base column, column + g.
    auto generate(const BaseMatrix & base) -> Code;

    struct AdmissibilityWitness
    {
        /// "triangle" (a + (alpha-1) b = alpha c) or "nabla" (the coupled pair of equations).
        std::string kind;
        /// Variable name -> element code.
        std::vector<std::pair<std::string, std::uint64_t>> values;
    };

    struct AdmissibilityReport
    {
        bool admissible = true;
        std::optional<AdmissibilityWitness> witness;
        /// alpha^2 - alpha + 1 = 0, so the coupled system collapsed to the triangle test.
        bool used_reduction = false;
    };

    /// Whether S avoids every solution of the equations a Delta or Nabla
    /// configuration in generate(restrict(D, S)) would force.
    auto admissible(const GaloisField & field, const std::vector<FieldElement> & subset, const FieldElement & alpha)
        -> AdmissibilityReport;

    struct SscProvenance
    {
        std::uint64_t q1 = 0;
        std::size_t n = 0;
        std::uint64_t q = 0;
        std::uint64_t alpha_base = 0;
        std::uint64_t alpha_big = 0;
        std::vector<VectorElement> points;
        /// Codes of the points in GF(q).
        std::vector<std::uint64_t> subset;
        std::size_t m = 0;
        std::string cap_source;
        bool cap_optimal = false;
    };

    struct SscBuild
    {
        Code code;
        SscProvenance provenance;
    };

    /// Length-3 separable code over GF(q1^n) from a cap in F_{q1}^n, with alpha a
    /// primitive sixth root of unity of GF(q1). Without a cap the canonical
    /// greedy cap is used.
    auto build_ssc(std::uint64_t q1, std::size_t n, const std::optional<CapSet> & cap = std::nullopt) -> SscBuild;
}
