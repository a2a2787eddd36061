#pragma once

// Exact arithmetic over GF(p^m) in polynomial-coefficient form, plus the
// vector-space view of GF(q1^n) over its subfield GF(q1).
//
// Elements serialize as the integer  sum_i coeffs[i] * p^i  ("code"), which is
// also the canonical ordering used for every deterministic choice made here.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sscodes
{
    /// Polynomial over F_p, constant term first.
    using Polynomial = std::vector<std::uint32_t>;

    class FieldElement;

    auto is_prime(std::uint64_t n) -> bool;

    /// Trial division by every monic polynomial of degree <= deg/2.
    auto is_irreducible(std::uint32_t p, const Polynomial & poly) -> bool;

    /// Immutable handle to GF(p^m). Copies share the same underlying tables.
    class GaloisField
    {
    public:
        /// Builds GF(p^m). Without a modulus the lexicographically smallest monic
        /// irreducible (smallest code of its lower coefficients) is chosen.
        static auto create(std::uint32_t p, std::uint32_t m, std::optional<Polynomial> modulus = std::nullopt)
            -> GaloisField;

        /// Builds the canonical field of the given prime-power order.
        static auto of_order(std::uint64_t q) -> GaloisField;

        auto characteristic() const -> std::uint32_t;
        auto degree() const -> std::uint32_t;
        auto order() const -> std::uint64_t;
        auto modulus() const -> const Polynomial &;
        auto describe() const -> std::string;

        auto zero() const -> FieldElement;
        auto one() const -> FieldElement;
        auto element(std::uint64_t code) const -> FieldElement;
        auto from_coeffs(Polynomial coeffs) const -> FieldElement;
        /// All elements in canonical (code) order.
        auto elements() const -> std::vector<FieldElement>;

        // Arithmetic on serialized codes, for inner loops that do not want
        // FieldElement allocations. Arguments must be < order().
        auto add(std::uint64_t a, std::uint64_t b) const -> std::uint64_t;
        auto sub(std::uint64_t a, std::uint64_t b) const -> std::uint64_t;
        auto neg(std::uint64_t a) const -> std::uint64_t;
        auto mul(std::uint64_t a, std::uint64_t b) const -> std::uint64_t;
        auto inv(std::uint64_t a) const -> std::uint64_t;
        auto pow(std::uint64_t a, std::uint64_t e) const -> std::uint64_t;

        auto decode(std::uint64_t code) const -> Polynomial;
        auto encode(const Polynomial & coeffs) const -> std::uint64_t;

        /// Same characteristic, degree and modulus.
        auto operator== (const GaloisField & other) const -> bool;

    private:
        struct Data;
        explicit GaloisField(std::shared_ptr<const Data> data);

        auto mul_poly(const Polynomial & a, const Polynomial & b) const -> Polynomial;

        std::shared_ptr<const Data> data_;
    };

    class FieldElement
    {
    public:
        FieldElement(GaloisField field, Polynomial coeffs);

        auto field() const -> const GaloisField & { return field_; }
        auto coeffs() const -> const Polynomial & { return coeffs_; }
        auto code() const -> std::uint64_t;

        auto is_zero() const -> bool;
        auto is_one() const -> bool;

        auto operator+ (const FieldElement & other) const -> FieldElement;
        auto operator- (const FieldElement & other) const -> FieldElement;
        auto operator* (const FieldElement & other) const -> FieldElement;
        auto operator/ (const FieldElement & other) const -> FieldElement;
        auto operator- () const -> FieldElement;

        /// Throws InvalidArgument on zero.
        auto inverse() const -> FieldElement;
        auto pow(std::uint64_t e) const -> FieldElement;
        /// Multiplicative order; throws on zero.
        auto multiplicative_order() const -> std::uint64_t;

        auto operator== (const FieldElement & other) const -> bool;
        /// Canonical ordering by code; elements of different fields do not compare.
        auto operator<=> (const FieldElement & other) const -> std::strong_ordering;

    private:
        auto check_same_field(const FieldElement & other) const -> void;

        GaloisField field_;
        Polynomial coeffs_;
    };

    enum class FieldOp
    {
        Add,
        Sub,
        Mul,
        Inv,
        Neg
    };

    /// Dispatch form of the field operations; unary ops ignore `b`.
    auto arithmetic(const FieldElement & a, const FieldElement & b, FieldOp op) -> FieldElement;

    /// Generator of the multiplicative group, smallest in canonical order. Needs q >= 3.
    auto primitive_element(const GaloisField & field) -> FieldElement;

    /// Smallest root of x^2 - x + 1 of multiplicative order 6. Needs q = 1 (mod 6).
    auto sixth_root_of_unity(const GaloisField & field) -> FieldElement;

    /// Point of F_{q1}^n: components are codes of base-field elements.
    struct VectorElement
    {
        std::vector<std::uint64_t> components;

        auto operator<=> (const VectorElement &) const = default;
    };

    auto vector_add(const GaloisField & base, const VectorElement & a, const VectorElement & b) -> VectorElement;
    auto vector_sub(const GaloisField & base, const VectorElement & a, const VectorElement & b) -> VectorElement;
    /// Componentwise scalar multiplication by a base-field element (code).
    auto vector_scale(const GaloisField & base, std::uint64_t scalar, const VectorElement & v) -> VectorElement;

    /// Index of a point in canonical order: sum_i components[i] * q1^i.
    auto point_index(const GaloisField & base, const VectorElement & v) -> std::uint64_t;
    auto point_from_index(const GaloisField & base, std::size_t dim, std::uint64_t index) -> VectorElement;

    /// F_{q1}-linear bijection between GF(q1^n) and F_{q1}^n.
    ///
    /// When the base is a prime field the view is the coefficient vector
    /// (a*x + b  <->  (b, a)). Otherwise the base is embedded through the
    /// smallest root of its modulus and a basis is picked greedily in
    /// canonical order, so that the prime-base case reduces to monomials.
    class VectorView
    {
    public:
        VectorView(GaloisField big, GaloisField base);

        auto big() const -> const GaloisField & { return big_; }
        auto base() const -> const GaloisField & { return base_; }
        auto dimension() const -> std::size_t { return dim_; }

        auto to_vector(const FieldElement & x) const -> VectorElement;
        auto from_vector(const VectorElement & v) const -> FieldElement;
        /// Image of a base-field element under the subfield embedding.
        auto embed(const FieldElement & base_element) const -> FieldElement;

    private:
        GaloisField big_;
        GaloisField base_;
        std::size_t dim_ = 0;
        bool prime_base_ = false;
        std::vector<std::uint64_t> embedding_;   // base code -> big code
        std::vector<std::uint64_t> to_vector_;   // big code -> dim_ components, flattened
        std::vector<std::uint64_t> from_vector_; // point index -> big code
    };
}
