#include <gtest/gtest.h>

#include "mcinv/coxeter.hpp"
#include "mcinv/root_system.hpp"

using namespace mcinv;

TEST(TypeId, Parsing)
{
    EXPECT_EQ(TypeId::parse("A5").str(), "A5");
    EXPECT_EQ(TypeId::parse("I2:7").dihedral_m, 7);
    EXPECT_EQ(TypeId::parse("I2(7)").dihedral_m, 7);
    EXPECT_THROW(TypeId::parse("D3"), Error);
    EXPECT_THROW(TypeId::parse("E9"), Error);
    EXPECT_THROW(TypeId::parse("H2"), Error);
    EXPECT_THROW(TypeId::parse("I2:2"), Error);
    EXPECT_THROW(TypeId::parse("Q4"), Error);
}

struct CountCase {
    const char* type;
    int positive;
};

class PositiveRootCount : public ::testing::TestWithParam<CountCase> {};

TEST_P(PositiveRootCount, MatchesClosedForm)
{
    const RootSystem rs(TypeId::parse(GetParam().type));
    EXPECT_EQ(rs.num_positive(), GetParam().positive);
}

INSTANTIATE_TEST_SUITE_P(
    AllTypes, PositiveRootCount,
    ::testing::Values(CountCase{"A1", 1}, CountCase{"A2", 3}, CountCase{"A5", 15}, CountCase{"A8", 36},
                      CountCase{"B2", 4}, CountCase{"B5", 25}, CountCase{"C3", 9}, CountCase{"C5", 25},
                      CountCase{"D4", 12}, CountCase{"D6", 30}, CountCase{"G2", 6}, CountCase{"F4", 24},
                      CountCase{"E6", 36}, CountCase{"E7", 63}, CountCase{"E8", 120}, CountCase{"H3", 15},
                      CountCase{"H4", 60}, CountCase{"I2:5", 5}, CountCase{"I2:12", 12}));

TEST(RootSystem, SumTableExamples)
{
    const RootSystem a2(TypeId::parse("A2"));
    const int a1 = a2.simple_index(0), a2i = a2.simple_index(1);
    ASSERT_TRUE(a2.root_sum(a1, a2i));
    EXPECT_EQ(a2.coords_str(*a2.root_sum(a1, a2i)), "(1,1)");
    EXPECT_FALSE(a2.root_sum(a1, *a2.root_sum(a1, a2i)));

    const RootSystem b2(TypeId::parse("B2"));
    const auto s = b2.root_sum(b2.eps_root({{1, 1}, {2, -1}}), b2.eps_root({{2, 1}}));
    ASSERT_TRUE(s);
    EXPECT_EQ(*s, b2.eps_root({{1, 1}}));
}

class RootSystemInvariants : public ::testing::TestWithParam<const char*> {};

TEST_P(RootSystemInvariants, Tables)
{
    const RootSystem rs(TypeId::parse(GetParam()));
    const int n = rs.num_positive();
    for (int i = 0; i < n; ++i) {
        // coefficients share a sign (positive roots: all nonnegative)
        for (const auto& c : rs.root(i).coords) EXPECT_GE(c.sign(), 0);
        for (int j = 0; j < n; ++j) {
            EXPECT_EQ(rs.root_sum(i, j), rs.root_sum(j, i));
            // sum table agrees with coordinate arithmetic
            std::vector<AlgebraicScalar> v;
            for (std::size_t c = 0; c < rs.root(i).coords.size(); ++c)
                v.push_back(rs.root(i).coords[c] + rs.root(j).coords[c]);
            EXPECT_EQ(rs.root_sum(i, j), rs.find(v));
        }
    }
    for (int k = 0; k < rs.rank(); ++k) {
        const auto& t = rs.reflection_table(k);
        for (int i = 0; i < n; ++i) {
            const int img = t[static_cast<std::size_t>(i)];
            if (i == rs.simple_index(k)) {
                EXPECT_EQ(img, signed_root::negate(i));
            } else {
                EXPECT_TRUE(signed_root::is_positive(img));
                EXPECT_EQ(t[static_cast<std::size_t>(img)], i);
            }
        }
    }
    // only +-alpha among multiples: no root is a rational multiple of another
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = rs.root(i).coords;
            const auto& b = rs.root(j).coords;
            bool parallel = true;
            for (std::size_t x = 0; x < a.size() && parallel; ++x)
                for (std::size_t y = x + 1; y < a.size() && parallel; ++y)
                    parallel = a[x] * b[y] == a[y] * b[x];
            EXPECT_FALSE(parallel) << i << " " << j;
        }
    // Gram matrix positive definite: leading principal minors (Bareiss-free, small rank)
    const auto& g = rs.gram();
    const int r = rs.rank();
    for (int m = 1; m <= r; ++m) {
        std::vector<std::vector<AlgebraicScalar>> a(static_cast<std::size_t>(m));
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) a[static_cast<std::size_t>(x)].push_back(g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
        AlgebraicScalar det = AlgebraicScalar(rs.field(), Rational(1));
        for (int c = 0; c < m; ++c) {
            const auto& piv = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
            ASSERT_EQ(piv.sign(), 1);
            det *= piv;
            const auto inv = piv.inverse();
            for (int x = c + 1; x < m; ++x) {
                const auto f = a[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] * inv;
                for (int y = c; y < m; ++y)
                    a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] -= f * a[static_cast<std::size_t>(c)][static_cast<std::size_t>(y)];
            }
        }
        EXPECT_EQ(det.sign(), 1);
    }
}

TEST_P(RootSystemInvariants, CoxeterMatrixSymmetric)
{
    const RootSystem rs(TypeId::parse(GetParam()));
    const auto& m = rs.coxeter_matrix();
    for (int i = 0; i < rs.rank(); ++i) {
        EXPECT_EQ(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], 1);
        for (int j = 0; j < rs.rank(); ++j) {
            EXPECT_EQ(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
            if (i != j) {
                EXPECT_GE(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 2);
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Types, RootSystemInvariants,
                         ::testing::Values("A3", "B3", "C3", "D4", "G2", "F4", "E6", "H3", "H4", "I2:5", "I2:8"));

TEST(RootSystem, CoxeterMatrices)
{
    EXPECT_EQ(RootSystem(TypeId::parse("H4")).coxeter_matrix()[0][1], 5);
    EXPECT_EQ(RootSystem(TypeId::parse("H4")).coxeter_matrix()[2][3], 3);
    EXPECT_EQ(RootSystem(TypeId::parse("F4")).coxeter_matrix()[1][2], 4);
    EXPECT_EQ(RootSystem(TypeId::parse("G2")).coxeter_matrix()[0][1], 6);
    EXPECT_EQ(RootSystem(TypeId::parse("I2:9")).coxeter_matrix()[0][1], 9);
    EXPECT_EQ(RootSystem(TypeId::parse("E6")).coxeter_matrix()[1][3], 3);  // alpha2 on the branch at alpha4
}

TEST(RootSystem, HighestRoots)
{
    const RootSystem f4(TypeId::parse("F4"));
    ASSERT_TRUE(f4.highest_root_index());
    EXPECT_EQ(f4.coords_str(*f4.highest_root_index()), "(2,4,3,2)");
    const RootSystem e8(TypeId::parse("E8"));
    EXPECT_EQ(e8.coords_str(*e8.highest_root_index()), "(2,3,4,6,5,4,3,2)");
    EXPECT_FALSE(RootSystem(TypeId::parse("H3")).highest_root_index());
}

TEST(RootSystem, Reflections)
{
    const RootSystem a2(TypeId::parse("A2"));
    EXPECT_EQ(reflection_of_root(a2, a2.simple_index(0)), element_from_word(a2, parse_word("1")));
    EXPECT_EQ(reflection_of_root(a2, 2), element_from_word(a2, parse_word("1 2 1")));
    const RootSystem b2(TypeId::parse("B2"));
    EXPECT_EQ(reflection_of_root(b2, *b2.highest_root_index()).length(), 3);
    for (const char* t : {"A3", "B3", "H3", "I2:7"}) {
        const RootSystem rs(TypeId::parse(t));
        const auto refl = all_reflections(rs);
        EXPECT_EQ(static_cast<int>(refl.size()), rs.num_positive());
        for (std::size_t i = 0; i < refl.size(); ++i) {
            EXPECT_EQ(refl[i] * refl[i], GroupElement::identity(rs));
            for (std::size_t j = i + 1; j < refl.size(); ++j) EXPECT_FALSE(refl[i] == refl[j]);
        }
    }
}

TEST(RootSystem, DiagramAutomorphisms)
{
    EXPECT_EQ(RootSystem(TypeId::parse("A4")).diagram_automorphisms().size(), 2U);
    EXPECT_EQ(RootSystem(TypeId::parse("D4")).diagram_automorphisms().size(), 6U);
    EXPECT_EQ(RootSystem(TypeId::parse("D5")).diagram_automorphisms().size(), 2U);
    EXPECT_EQ(RootSystem(TypeId::parse("E6")).diagram_automorphisms().size(), 2U);
    EXPECT_EQ(RootSystem(TypeId::parse("E7")).diagram_automorphisms().size(), 1U);
    EXPECT_EQ(RootSystem(TypeId::parse("B3")).diagram_automorphisms().size(), 1U);
}

TEST(RootSystem, CorootImage)
{
    const RootSystem b2(TypeId::parse("B2"));
    const RootSystem c2(TypeId::parse("C2"));
    const CorootMap map(b2, c2);
    EXPECT_TRUE(map.image(RootSet(4)).empty());
    EXPECT_EQ(map(b2.eps_root({{1, 1}})), c2.eps_root({{1, 2}}));
    EXPECT_TRUE(map.image(RootSet::full(4)).is_full());
    EXPECT_THROW(coroot_image(RootSystem(TypeId::parse("A3")), RootSet(6)), Error);
}
