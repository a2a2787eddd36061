#include <sscodes/errors.hpp>
#include <sscodes/field.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace sscodes;

TEST(Field, CanonicalModuli)
{
    EXPECT_EQ(GaloisField::create(7, 1).modulus(), (Polynomial{0, 1}));
    EXPECT_EQ(GaloisField::create(2, 2).modulus(), (Polynomial{1, 1, 1}));
    EXPECT_EQ(GaloisField::create(3, 2, Polynomial{1, 0, 1}).order(), 9u);
    EXPECT_THROW(GaloisField::create(2, 2, Polynomial{1, 0, 1}), InvalidArgument); // (x+1)^2
    EXPECT_THROW(GaloisField::of_order(6), InvalidArgument);
    EXPECT_THROW(GaloisField::create(4, 1), InvalidArgument);
}

TEST(Field, Irreducibility)
{
    EXPECT_TRUE(is_irreducible(3, {1, 0, 1}));
    EXPECT_FALSE(is_irreducible(2, {1, 0, 1}));
    EXPECT_TRUE(is_irreducible(2, {1, 1, 0, 1}));
    EXPECT_FALSE(is_irreducible(5, {4, 0, 1})); // x^2 - 1
}

TEST(Field, SmallArithmetic)
{
    const auto f7 = GaloisField::of_order(7);
    EXPECT_EQ((f7.element(3) * f7.element(5)).code(), 1u);
    EXPECT_EQ(f7.element(3).inverse().code(), 5u);
    EXPECT_EQ(arithmetic(f7.element(3), f7.element(5), FieldOp::Mul).code(), 1u);
    EXPECT_EQ(arithmetic(f7.element(3), f7.zero(), FieldOp::Inv).code(), 5u);
    EXPECT_EQ(arithmetic(f7.element(3), f7.zero(), FieldOp::Neg).code(), 4u);

    const auto f4 = GaloisField::of_order(4);
    const auto x = f4.from_coeffs({0, 1});
    EXPECT_EQ(x * x, f4.from_coeffs({1, 1}));
    EXPECT_THROW(f4.zero().inverse(), InvalidArgument);
    EXPECT_THROW(f4.one() + f7.one(), InvalidArgument);
}

TEST(Field, PrimeFieldsMatchModularArithmetic)
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        const auto f = GaloisField::of_order(p);
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b) {
                EXPECT_EQ((f.element(a) + f.element(b)).code(), (a + b) % p);
                EXPECT_EQ((f.element(a) - f.element(b)).code(), (a + p - b) % p);
                EXPECT_EQ((f.element(a) * f.element(b)).code(), (a * b) % p);
            }
    }
}

class FieldAxioms : public ::testing::TestWithParam<std::uint64_t>
{
};

TEST_P(FieldAxioms, Exhaustive)
{
    const auto f = GaloisField::of_order(GetParam());
    const auto q = f.order();
    for (std::uint64_t a = 0; a < q; ++a) {
        EXPECT_EQ(f.add(a, 0), a);
        EXPECT_EQ(f.mul(a, 1), a);
        EXPECT_EQ(f.add(a, f.neg(a)), 0u);
        if (a != 0)
            EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
        for (std::uint64_t b = 0; b < q; ++b) {
            ASSERT_EQ(f.add(a, b), f.add(b, a));
            ASSERT_EQ(f.mul(a, b), f.mul(b, a));
            for (std::uint64_t c = 0; c < q; ++c) {
                ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                ASSERT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                ASSERT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, FieldAxioms,
    ::testing::Values(2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64));

TEST(Field, PrimitiveElements)
{
    EXPECT_EQ(primitive_element(GaloisField::of_order(7)).code(), 3u);
    EXPECT_EQ(primitive_element(GaloisField::of_order(3)).code(), 2u);
    EXPECT_EQ(primitive_element(GaloisField::of_order(4)).code(), 2u); // x
    for (std::uint64_t q : {3, 4, 5, 8, 9, 25, 49, 64, 81, 121}) {
        const auto f = GaloisField::of_order(q);
        const auto g = primitive_element(f);
        std::set<std::uint64_t> powers;
        auto x = f.one();
        for (std::uint64_t i = 0; i + 1 < q; ++i) {
            powers.insert(x.code());
            x = x * g;
        }
        EXPECT_EQ(powers.size(), q - 1) << q;
        EXPECT_EQ(g.multiplicative_order(), q - 1);
    }
}

TEST(Field, SixthRoots)
{
    EXPECT_EQ(sixth_root_of_unity(GaloisField::of_order(7)).code(), 3u);
    EXPECT_EQ(sixth_root_of_unity(GaloisField::of_order(13)).code(), 4u);
    EXPECT_THROW(sixth_root_of_unity(GaloisField::of_order(5)), InvalidArgument);
    EXPECT_THROW(sixth_root_of_unity(GaloisField::of_order(8)), InvalidArgument);
    for (std::uint64_t q : {7, 13, 19, 25, 31, 37, 43, 49, 121}) {
        const auto f = GaloisField::of_order(q);
        const auto a = sixth_root_of_unity(f);
        EXPECT_TRUE(a.pow(6).is_one()) << q;
        for (int k = 1; k <= 5; ++k)
            EXPECT_FALSE(a.pow(k).is_one()) << q;
        EXPECT_TRUE((a * a - a + f.one()).is_zero()) << q;
    }
}

TEST(Field, VectorViewPrimeBase)
{
    const auto big = GaloisField::of_order(49);
    const auto base = GaloisField::of_order(7);
    const VectorView view{big, base};
    EXPECT_EQ(view.dimension(), 2u);
    // a x + b  <->  (b, a)
    EXPECT_EQ(view.to_vector(big.from_coeffs({3, 5})).components, (std::vector<std::uint64_t>{3, 5}));
    for (const auto & x : big.elements())
        EXPECT_EQ(view.from_vector(view.to_vector(x)), x);
}

TEST(Field, VectorViewIsLinearOverSubfield)
{
    for (auto [q, q1] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{16, 4}, {64, 4}, {64, 8}, {81, 9}, {49, 7}}) {
        const auto big = GaloisField::of_order(q);
        const auto base = GaloisField::of_order(q1);
        const VectorView view{big, base};
        std::set<VectorElement> images;
        for (const auto & x : big.elements()) {
            const auto v = view.to_vector(x);
            images.insert(v);
            EXPECT_EQ(view.from_vector(v), x);
        }
        EXPECT_EQ(images.size(), q);
        for (const auto & lambda : base.elements()) {
            const auto embedded = view.embed(lambda);
            for (std::uint64_t c = 0; c < q; c += 3) {
                const auto x = big.element(c);
                const auto y = big.element((c * 7 + 1) % q);
                EXPECT_EQ(view.to_vector(embedded * x + y),
                    vector_add(base, vector_scale(base, lambda.code(), view.to_vector(x)), view.to_vector(y)));
            }
        }
        // the embedding is a ring homomorphism
        for (const auto & a : base.elements())
            for (const auto & b : base.elements()) {
                EXPECT_EQ(view.embed(a * b), view.embed(a) * view.embed(b));
                EXPECT_EQ(view.embed(a + b), view.embed(a) + view.embed(b));
            }
    }
    EXPECT_THROW(VectorView(GaloisField::of_order(27), GaloisField::of_order(9)), InvalidArgument);
}

TEST(Field, PointIndexRoundTrip)
{
    const auto base = GaloisField::of_order(5);
    for (std::uint64_t i = 0; i < 125; ++i)
        EXPECT_EQ(point_index(base, point_from_index(base, 3, i)), i);
}
