#include <gtest/gtest.h>

#include <random>

#include "mcinv/scalar.hpp"

using namespace mcinv;

namespace {

AlgebraicScalar random_scalar(const FieldPtr& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> c;
    for (int i = 0; i < f->degree(); ++i) c.emplace_back(num(rng), den(rng));
    for (auto& q : c) q.canonicalize();
    return {f, c};
}

}  // namespace

TEST(Rational, ReducedForm)
{
    Rational q(6, -4);
    q.canonicalize();
    EXPECT_EQ(to_string(q), "-3/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_EQ(sign(q), -1);
}

TEST(NumberField, MinimalPolynomials)
{
    auto poly = [](int m) {
        std::vector<std::string> out;
        for (const auto& c : NumberField::real_cyclotomic(m)->min_poly()) out.push_back(to_string(c));
        return out;
    };
    EXPECT_EQ(poly(5), (std::vector<std::string>{"-1", "-1", "1"}));
    EXPECT_EQ(poly(4), (std::vector<std::string>{"-2", "0", "1"}));
    EXPECT_EQ(poly(7), (std::vector<std::string>{"1", "-2", "-1", "1"}));
    EXPECT_EQ(poly(9), (std::vector<std::string>{"-1", "-3", "0", "1"}));
    EXPECT_EQ(NumberField::real_cyclotomic(3)->degree(), 1);
    EXPECT_EQ(NumberField::real_cyclotomic(12)->degree(), 4);
    EXPECT_EQ(NumberField::real_cyclotomic(5), NumberField::real_cyclotomic(5));
}

TEST(AlgebraicScalar, GoldenRatioArithmetic)
{
    const auto f = NumberField::real_cyclotomic(5);
    const auto phi = AlgebraicScalar::generator(f);
    const AlgebraicScalar one(f, Rational(1));
    EXPECT_EQ((one + phi).str(), "1 + x");
    EXPECT_EQ(phi * phi, one + phi);
    EXPECT_TRUE((phi + (-phi)).is_zero());
    EXPECT_EQ((phi - one).sign(), 1);
    EXPECT_EQ((-phi).sign(), -1);
    EXPECT_EQ(AlgebraicScalar(f).sign(), 0);
    EXPECT_EQ(phi.inverse(), phi - one);
    EXPECT_NEAR(phi.to_double(), 1.6180339887, 1e-9);
}

TEST(AlgebraicScalar, MismatchedFieldsThrow)
{
    const auto a = AlgebraicScalar::generator(NumberField::real_cyclotomic(5));
    const auto b = AlgebraicScalar::generator(NumberField::real_cyclotomic(7));
    EXPECT_THROW(a + b, Error);
    EXPECT_THROW(a * b, Error);
}

TEST(AlgebraicScalar, SignsNearZero)
{
    // 2cos(pi/7) is close to 1.80194; probe rational neighbours on both sides
    const auto f = NumberField::real_cyclotomic(7);
    const auto x = AlgebraicScalar::generator(f);
    EXPECT_EQ((x - AlgebraicScalar(f, Rational(180193, 100000))).sign(), 1);
    EXPECT_EQ((x - AlgebraicScalar(f, Rational(180194, 100000))).sign(), -1);
    // x^3 - x^2 - 2x + 1 = 0 exactly
    EXPECT_TRUE((x * x * x - x * x - x * Rational(2) + AlgebraicScalar(f, Rational(1))).is_zero());
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, RandomTriples)
{
    const auto f = NumberField::real_cyclotomic(GetParam());
    std::mt19937_64 rng(1234 + static_cast<unsigned>(GetParam()));
    for (int i = 0; i < 300; ++i) {
        const auto a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a.sign(), -(-a).sign());
        const int sq = (a * a).sign();
        EXPECT_GE(sq, 0);
        EXPECT_EQ(sq == 0, a.is_zero());
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), AlgebraicScalar(f, Rational(1)));
        }
        // sign agrees with floating point when comfortably away from zero
        const double d = a.to_double();
        if (std::abs(d) > 1e-6) {
            EXPECT_EQ(a.sign(), d > 0 ? 1 : -1);
        }
        EXPECT_EQ(compare(a, b), -compare(b, a));
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Values(1, 4, 5, 7, 8, 9, 12));
