#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tworow;
using namespace tworow::testing;

namespace {

Errc code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::assertion_failure;
}

}  // namespace

TEST(FieldSpec, ParsesNames)
{
    EXPECT_EQ(FieldSpec::parse("gf2"), FieldSpec::gf2());
    EXPECT_EQ(FieldSpec::parse("GF(5)"), FieldSpec::gfp(5));
    EXPECT_EQ(FieldSpec::parse("q"), FieldSpec::rationals());
    EXPECT_EQ(FieldSpec::parse("gf(2)"), FieldSpec::gf2());
    EXPECT_EQ(FieldSpec::gfp(7).name(), "gf(7)");
    EXPECT_EQ(code_of([] { FieldSpec::parse("gf(4)"); }), Errc::invalid_argument);
    EXPECT_EQ(code_of([] { FieldSpec::parse("reals"); }), Errc::parse_error);
    EXPECT_EQ(code_of([] { FieldSpec::gfp(1); }), Errc::invalid_argument);
}

TEST(Scalar, Gf2Arithmetic)
{
    const FieldSpec f = FieldSpec::gf2();
    const Scalar one = Scalar::one(f);
    EXPECT_TRUE((one + one).is_zero());
    EXPECT_EQ(-one, one);
    EXPECT_EQ(one.inverse(), one);
}

TEST(Scalar, GfpInverse)
{
    const FieldSpec f = FieldSpec::gfp(7);
    EXPECT_EQ(Scalar::from_int(f, 3).inverse(), Scalar::from_int(f, 5));
    EXPECT_EQ(Scalar::from_int(f, -1), Scalar::from_int(f, 6));
    EXPECT_EQ(code_of([&] { Scalar::zero(f).inverse(); }), Errc::division_by_zero);
}

TEST(Scalar, RationalReduction)
{
    const FieldSpec f = FieldSpec::rationals();
    const Scalar half = Scalar::parse(f, "2/4");
    EXPECT_EQ(half.to_string(), "1/2");
    EXPECT_EQ(Scalar::parse(f, "3/-6").to_string(), "-1/2");
    EXPECT_EQ((half + half).to_string(), "1");
    EXPECT_EQ(Scalar::parse(f, "123456789012345678901234567890").to_string(), "123456789012345678901234567890");
    EXPECT_EQ(code_of([&] { Scalar::parse(f, "1/0"); }), Errc::parse_error);
}

TEST(Scalar, ParseReducesIntegersInFiniteFields)
{
    EXPECT_EQ(Scalar::parse(FieldSpec::gfp(5), "-7"), Scalar::from_int(FieldSpec::gfp(5), 3));
    EXPECT_EQ(Scalar::parse(FieldSpec::gf2(), "12345678901234567891"), Scalar::one(FieldSpec::gf2()));
    EXPECT_EQ(code_of([] { Scalar::parse(FieldSpec::gfp(5), "1/2"); }), Errc::parse_error);
    EXPECT_EQ(code_of([] { Scalar::parse(FieldSpec::gf2(), "x"); }), Errc::parse_error);
}

TEST(Scalar, MixedFieldsRejected)
{
    const Scalar a = Scalar::one(FieldSpec::gf2());
    const Scalar b = Scalar::one(FieldSpec::gfp(3));
    EXPECT_EQ(code_of([&] { (void)(a + b); }), Errc::field_mismatch);
    EXPECT_EQ(code_of([&] { (void)(a * b); }), Errc::field_mismatch);
    EXPECT_FALSE(a == b);
}

TEST(Scalar, FieldAxiomsHoldOnRandomTriples)
{
    std::mt19937_64 rng(11);
    for (std::size_t k = 0; k < 4; ++k) {
        const FieldSpec f = field_at(k);
        for (int trial = 0; trial < 300; ++trial) {
            const Scalar x = random_scalar(f, rng), y = random_scalar(f, rng), z = random_scalar(f, rng);
            EXPECT_EQ(x + y, y + x);
            EXPECT_EQ(x * y, y * x);
            EXPECT_EQ((x + y) + z, x + (y + z));
            EXPECT_EQ((x * y) * z, x * (y * z));
            EXPECT_EQ(x * (y + z), x * y + x * z);
            EXPECT_TRUE((x - x).is_zero());
            EXPECT_EQ(x + Scalar::zero(f), x);
            EXPECT_EQ(x * Scalar::one(f), x);
            if (!x.is_zero()) {
                EXPECT_TRUE((x * x.inverse()).is_one());
            }
            if (!y.is_zero()) {
                EXPECT_EQ(x / y * y, x);
            }
        }
    }
}

TEST(Scalar, RoundTripsThroughText)
{
    std::mt19937_64 rng(5);
    for (std::size_t k = 0; k < 4; ++k)
        for (int trial = 0; trial < 50; ++trial) {
            const Scalar x = random_scalar(field_at(k), rng);
            EXPECT_EQ(Scalar::parse(field_at(k), x.to_string()), x);
        }
}
