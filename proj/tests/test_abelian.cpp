#include <gtest/gtest.h>

#include <random>

#include "mcinv/abelian.hpp"
#include "mcinv/constructions.hpp"

using namespace mcinv;

TEST(Abelian, Examples)
{
    const RootSystem a2(TypeId::parse("A2"));
    const int a1 = *a2.find(std::vector<int>{1, 0}), a2i = *a2.find(std::vector<int>{0, 1}),
              th = *a2.find(std::vector<int>{1, 1});
    EXPECT_TRUE(is_abelian(a2, RootSet(3, {a1})));
    EXPECT_TRUE(is_strongly_abelian(a2, RootSet(3, {a1})).strongly_abelian);
    EXPECT_FALSE(is_abelian(a2, RootSet(3, {a1, a2i})));
    EXPECT_TRUE(is_abelian(a2, RootSet(3, {a1, th})));
    EXPECT_TRUE(is_strongly_abelian(a2, RootSet(3, {a1, th})).strongly_abelian);
}

TEST(Abelian, B2Counterexample)
{
    const RootSystem b2(TypeId::parse("B2"));
    const RootSet s(4, {b2.eps_root({{1, 1}, {2, -1}}), b2.eps_root({{1, 1}, {2, 1}})});
    EXPECT_TRUE(is_abelian(b2, s));
    const auto v = is_strongly_abelian(b2, s);
    EXPECT_FALSE(v.strongly_abelian);
    ASSERT_TRUE(v.certificate);
    EXPECT_EQ(v.certificate->gamma, b2.eps_root({{1, 1}}));
    const AlgebraicScalar half(b2.field(), Rational(1, 2));
    EXPECT_EQ(v.certificate->s, half);
    EXPECT_EQ(v.certificate->t, half);
}

class CertificateCheck : public ::testing::TestWithParam<const char*> {};

TEST_P(CertificateCheck, CertificatesAreExact)
{
    const RootSystem rs(TypeId::parse(GetParam()));
    const AbelianAnalyzer an(rs);
    const int n = rs.num_positive();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const bool compatible = an.compatible(a).contains(b);
            EXPECT_EQ(compatible, an.compatible(b).contains(a));
            const auto c = cone_violation(rs, a, b);
            EXPECT_EQ(compatible, !c.has_value());
            if (!c) continue;
            EXPECT_EQ(c->s.sign(), 1);
            EXPECT_EQ(c->t.sign(), 1);
            const auto& va = rs.root(a).coords;
            const auto& vb = rs.root(b).coords;
            const auto& vg = rs.root(c->gamma).coords;
            for (std::size_t k = 0; k < vg.size(); ++k) EXPECT_EQ(c->s * va[k] + c->t * vb[k], vg[k]);
            // strongly abelian implies abelian: a violating sum is itself a cone member
            if (rs.root_sum(a, b)) {
                EXPECT_FALSE(compatible);
            }
        }
}

INSTANTIATE_TEST_SUITE_P(Types, CertificateCheck, ::testing::Values("A3", "B3", "C3", "G2", "F4", "H3", "I2:7"));

TEST(Abelian, NonSimpleRootsArePositiveCombinations)
{
    // simple roots never lie strictly inside the cone of two other positive roots
    for (const char* t : {"A4", "B3", "C3", "D4", "G2", "F4", "H3", "I2:5", "I2:8"}) {
        const RootSystem rs(TypeId::parse(t));
        std::vector<bool> hit(static_cast<std::size_t>(rs.num_positive()), false);
        for (int a = 0; a < rs.num_positive(); ++a)
            for (int b = a + 1; b < rs.num_positive(); ++b)
                if (auto c = cone_violation(rs, a, b)) hit[static_cast<std::size_t>(c->gamma)] = true;
        for (int g = 0; g < rs.num_positive(); ++g) {
            if (rs.simple_position(g) >= 0) {
                EXPECT_FALSE(hit[static_cast<std::size_t>(g)]) << t;
            }
        }
    }
}

TEST(MaxStronglyAbelian, KnownValues)
{
    EXPECT_EQ(max_strongly_abelian(RootSystem(TypeId::parse("F4"))).value, 6);
    EXPECT_EQ(max_strongly_abelian(RootSystem(TypeId::parse("H3"))).value, 5);
    const auto h4 = max_strongly_abelian(RootSystem(TypeId::parse("H4")));
    EXPECT_EQ(h4.value, 10);
    EXPECT_EQ(h4.status, SearchStatus::exact);
}

TEST(MaxStronglyAbelian, WitnessIsStronglyAbelianAndInvariant)
{
    for (const char* t : {"A5", "D4", "D5", "E6", "B4"}) {
        const RootSystem rs(TypeId::parse(t));
        const AbelianAnalyzer an(rs);
        const auto r = max_strongly_abelian(an);
        EXPECT_TRUE(is_strongly_abelian(rs, r.witness).strongly_abelian);
        for (const auto& perm : rs.diagram_automorphisms()) {
            RootSet img(rs.num_positive());
            r.witness.for_each([&](int i) { img.insert(perm[static_cast<std::size_t>(i)]); });
            EXPECT_TRUE(an.is_strongly_abelian(img));
        }
    }
}

TEST(MaxStronglyAbelian, BudgetGivesLowerBound)
{
    SearchConfig cfg;
    cfg.node_budget = 3;
    const auto r = max_strongly_abelian(RootSystem(TypeId::parse("E7")), cfg);
    EXPECT_EQ(r.status, SearchStatus::lower_bound);
}

TEST(StronglyAbelian, ConstructedEssentialSets)
{
    for (const char* t : {"A3", "A4", "A5", "A6", "B3", "B4", "B5", "D4", "D5", "D6", "F4", "H3", "H4"}) {
        const RootSystem rs(TypeId::parse(t));
        const RootSet s = essential_set_of_family(rs, FamilyId{rs.type(), 1});
        EXPECT_TRUE(is_strongly_abelian(rs, s).strongly_abelian) << t;
    }
}

TEST(StronglyAbelian, ImpliesAbelianOnRandomSets)
{
    std::mt19937_64 rng(2024);
    for (const char* t : {"B3", "C4", "G2", "F4", "H3", "I2:9"}) {
        const RootSystem rs(TypeId::parse(t));
        const AbelianAnalyzer an(rs);
        for (int it = 0; it < 300; ++it) {
            RootSet s(rs.num_positive());
            std::bernoulli_distribution keep(0.15);
            for (int i = 0; i < rs.num_positive(); ++i)
                if (keep(rng)) s.insert(i);
            if (an.is_strongly_abelian(s)) {
                EXPECT_TRUE(an.is_abelian(s)) << t;
            }
            EXPECT_EQ(an.is_abelian(s), is_abelian(rs, s));
            EXPECT_EQ(an.is_strongly_abelian(s), is_strongly_abelian(rs, s).strongly_abelian);
        }
    }
}

TEST(AdeEquivalence, Holds)
{
    EXPECT_TRUE(ade_equivalence_check(RootSystem(TypeId::parse("A5")), 10000, 1).ok);
    EXPECT_TRUE(ade_equivalence_check(RootSystem(TypeId::parse("D5")), 10000, 2).ok);
    EXPECT_TRUE(ade_equivalence_check(RootSystem(TypeId::parse("E6")), 1000, 3).ok);
    EXPECT_THROW(ade_equivalence_check(RootSystem(TypeId::parse("B3")), 10), Error);
}
