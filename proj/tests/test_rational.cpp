#include <gtest/gtest.h>

#include "vbplab/rational.hpp"
#include "vbplab/rng.hpp"

using vbplab::Rational;

TEST(Rational, NormalizesSignAndGcd)
{
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, 7), Rational(0));
    EXPECT_EQ(Rational(0, 7).den(), 1);
}

TEST(Rational, ArithmeticIsExact)
{
    Rational third(1, 3);
    EXPECT_EQ(third + third + third, Rational(1));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(7, 6), Rational(1));
}

TEST(Rational, CeilAndFormatting)
{
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(3).ceil(), 3);
    EXPECT_EQ(Rational(-1, 2).ceil(), 0);
    EXPECT_EQ(Rational(5, 2).str(), "5/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, ParseAcceptsFractionsAndIntegers)
{
    EXPECT_EQ(Rational::parse("1/6"), Rational(1, 6));
    EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("0"), Rational(0));
    EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
    EXPECT_THROW(Rational::parse("1/0"), vbplab::InputError);
    EXPECT_THROW(Rational::parse("abc"), vbplab::InputError);
    EXPECT_THROW(Rational::parse("1/"), vbplab::InputError);
}

TEST(Rational, OverflowThrowsInsteadOfWrapping)
{
    Rational big(std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + Rational(1), std::overflow_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

// Field laws on random small rationals.
TEST(Rational, FieldLawsProperty)
{
    vbplab::CounterRng rng(11);
    auto draw = [&] {
        auto n = static_cast<std::int64_t>(rng() % 41) - 20;
        auto d = static_cast<std::int64_t>(rng() % 19) + 1;
        return Rational(n, d);
    };
    for (int i = 0; i < 2000; ++i) {
        Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
        EXPECT_EQ(a < b, a.to_double() < b.to_double() - 1e-12);
    }
}
