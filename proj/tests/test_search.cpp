#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mcinv/search.hpp"

using namespace mcinv;

namespace {

RootSet roots(const RootSystem& rs, std::initializer_list<std::vector<int>> coords)
{
    RootSet s(rs.num_positive());
    for (const auto& c : coords) s.insert(*rs.find(c));
    return s;
}

std::vector<RootSet> drain(WitnessPool pool)
{
    std::vector<RootSet> out;
    while (auto g = pool.next()) out.push_back(inversion_set(*g));
    std::sort(out.begin(), out.end(), [](const RootSet& a, const RootSet& b) { return lex_less(a, b); });
    return out;
}

std::vector<RootSet> filter_oracle(const RootSystem& rs, int beta, const RootSet& s)
{
    std::vector<RootSet> out;
    RootSet only(rs.num_positive());
    only.insert(beta);
    for (const auto& inv : enumerate_inversion_sets(rs, 100000))
        if ((inv & s) == only) out.push_back(inv);
    std::sort(out.begin(), out.end(), [](const RootSet& a, const RootSet& b) { return lex_less(a, b); });
    return out;
}

SearchConfig quiet()
{
    SearchConfig cfg;
    cfg.seed_with_family = false;
    cfg.time_budget = 120;
    return cfg;
}

}  // namespace

TEST(WitnessPool, A2Example)
{
    const RootSystem a2(TypeId::parse("A2"));
    const RootSet s = roots(a2, {{1, 0}, {0, 1}});
    const auto pool = drain(witness_pool(a2, *a2.find(std::vector<int>{1, 0}), s));
    ASSERT_EQ(pool.size(), 2U);
    // largest inversion sets first
    EXPECT_EQ(pool[0], inversion_set(element_from_word(a2, parse_word("1 2"))));
    EXPECT_EQ(pool[1], inversion_set(element_from_word(a2, parse_word("1"))));
    EXPECT_THROW(witness_pool(a2, *a2.find(std::vector<int>{1, 1}), s), Error);
}

TEST(WitnessPool, FullSetOnlySimpleReflections)
{
    for (const char* t : {"A3", "B3", "H3"}) {
        const RootSystem rs(TypeId::parse(t));
        const RootSet all = RootSet::full(rs.num_positive());
        for (int b = 0; b < rs.num_positive(); ++b) {
            const auto pool = drain(witness_pool(rs, b, all));
            if (rs.simple_position(b) >= 0) {
                ASSERT_EQ(pool.size(), 1U);
                EXPECT_EQ(pool[0].indices(), std::vector<int>{b});
            } else {
                EXPECT_TRUE(pool.empty());
            }
        }
    }
}

TEST(WitnessPool, BfsEqualsFilterOracle)
{
    std::mt19937_64 rng(99);
    for (const char* t : {"A3", "B3", "D4", "G2", "H3", "F4"}) {
        const RootSystem rs(TypeId::parse(t));
        for (int it = 0; it < 20; ++it) {
            RootSet s(rs.num_positive());
            std::bernoulli_distribution keep(0.25);
            for (int i = 0; i < rs.num_positive(); ++i)
                if (keep(rng)) s.insert(i);
            if (s.empty()) s.insert(0);
            s.for_each([&](int b) { EXPECT_EQ(drain(witness_pool(rs, b, s)), filter_oracle(rs, b, s)) << t; });
        }
    }
}

TEST(FeasibleEssentialSet, A2Examples)
{
    const RootSystem a2(TypeId::parse("A2"));
    auto y = feasible_essential_set(a2, roots(a2, {{1, 0}, {0, 1}}));
    ASSERT_TRUE(y);
    EXPECT_EQ(y->size(), 2U);
    EXPECT_TRUE(is_minimal_inversion_complete(a2, *y));
    y = feasible_essential_set(a2, roots(a2, {{1, 1}}));
    ASSERT_TRUE(y);
    ASSERT_EQ(y->size(), 1U);
    EXPECT_EQ((*y)[0].length(), 3);
    EXPECT_FALSE(feasible_essential_set(a2, RootSet::full(3)));
}

TEST(FeasibleEssentialSet, ConstructedEssentialSetsAreFeasible)
{
    for (const char* t : {"A4", "B3", "D4", "F4", "H3"}) {
        const RootSystem rs(TypeId::parse(t));
        const RootSet s = essential_set_of_family(rs, FamilyId{rs.type(), 1});
        const auto y = feasible_essential_set(rs, s);
        ASSERT_TRUE(y) << t;
        EXPECT_TRUE(is_minimal_inversion_complete(rs, *y));
        const auto ess = essential_roots(rs, *y);
        s.for_each([&](int b) { EXPECT_TRUE(ess.count(b)) << t; });
    }
}

TEST(FeasibleEssentialSet, PoolCapReportsUndecided)
{
    const RootSystem f4(TypeId::parse("F4"));
    SearchConfig cfg;
    cfg.pool_cap = 2;
    RootSet s(24);
    s.insert(0);
    s.insert(1);
    EXPECT_THROW(feasible_essential_set(f4, s, cfg), BudgetExceeded);
}

struct McCase {
    const char* type;
    int value;
};

class SearchValues : public ::testing::TestWithParam<McCase> {};

TEST_P(SearchValues, ExactAndVerified)
{
    const RootSystem rs(TypeId::parse(GetParam().type));
    const auto r = search_mc(rs, quiet());
    EXPECT_EQ(r.value, GetParam().value);
    EXPECT_EQ(r.status, SearchStatus::exact);
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.value);
    EXPECT_TRUE(is_minimal_inversion_complete(rs, r.witness));
    EXPECT_TRUE(is_weak_antichain(r.witness));
    EXPECT_EQ(r.essential_set.size(), r.value);
    const auto ess = essential_roots(rs, r.witness);
    r.essential_set.for_each([&](int b) { EXPECT_TRUE(ess.count(b)); });
}

INSTANTIATE_TEST_SUITE_P(SmallTypes, SearchValues,
                         ::testing::Values(McCase{"A2", 2}, McCase{"A3", 4}, McCase{"A4", 6}, McCase{"B2", 2},
                                           McCase{"B3", 4}, McCase{"C3", 4}, McCase{"B4", 7}, McCase{"D4", 6},
                                           McCase{"G2", 2}, McCase{"H3", 5}, McCase{"I2:5", 2},
                                           McCase{"I2:7", 2}, McCase{"I2:12", 2}));

class BruteForceAgreement : public ::testing::TestWithParam<const char*> {};

TEST_P(BruteForceAgreement, SameValue)
{
    const RootSystem rs(TypeId::parse(GetParam()));
    const auto b = brute_force_mc(rs);
    const auto s = search_mc(rs, quiet());
    EXPECT_EQ(b.value, s.value);
    EXPECT_EQ(b.status, SearchStatus::exact);
    EXPECT_TRUE(is_minimal_inversion_complete(rs, b.witness));
}

INSTANTIATE_TEST_SUITE_P(Tiny, BruteForceAgreement,
                         ::testing::Values("A2", "A3", "B2", "B3", "C3", "G2", "I2:5", "I2:7", "I2:12", "A4", "D4"));

TEST(BruteForce, Guards)
{
    EXPECT_THROW(brute_force_mc(RootSystem(TypeId::parse("H3"))), Error);
    EXPECT_THROW(brute_force_mc(RootSystem(TypeId::parse("A5"))), Error);
}

TEST(Search, PruningIsSound)
{
    for (const char* t : {"A3", "B3", "D4", "G2", "H3", "I2:7"}) {
        const RootSystem rs(TypeId::parse(t));
        auto on = quiet(), off = quiet();
        off.use_conditions_pruning = false;
        EXPECT_EQ(search_mc(rs, on).value, search_mc(rs, off).value) << t;
    }
}

TEST(Search, DeterministicAcrossThreads)
{
    for (const char* t : {"B3", "D4", "H3"}) {
        const RootSystem rs(TypeId::parse(t));
        auto one = quiet(), four = quiet();
        four.threads = 4;
        const auto a = search_mc(rs, one), b = search_mc(rs, four);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.essential_set, b.essential_set);
        ASSERT_EQ(a.witness.size(), b.witness.size());
        for (std::size_t i = 0; i < a.witness.size(); ++i) EXPECT_EQ(a.witness[i], b.witness[i]);
    }
}

TEST(Search, SeedGivesLowerBoundUnderTinyBudget)
{
    const RootSystem e6(TypeId::parse("E6"));
    SearchConfig cfg;
    cfg.time_budget = 2;
    const auto r = search_mc(e6, cfg);
    EXPECT_EQ(r.status, SearchStatus::lower_bound);
    EXPECT_GE(r.value, 16);
    EXPECT_TRUE(is_minimal_inversion_complete(e6, r.witness));
}

TEST(Search, BudgetExhaustedBelowKMin)
{
    const RootSystem h4(TypeId::parse("H4"));
    SearchConfig cfg;
    cfg.node_budget = 50;
    cfg.k_min = 9;
    const auto r = search_mc(h4, cfg);
    EXPECT_EQ(r.status, SearchStatus::budget_exhausted);
    EXPECT_EQ(r.value, 8);
}

TEST(Search, KMaxBelowValueStillExact)
{
    const RootSystem b3(TypeId::parse("B3"));
    auto cfg = quiet();
    cfg.k_max = 3;
    const auto r = search_mc(b3, cfg);
    EXPECT_EQ(r.value, 3);
    EXPECT_THROW(
        [&] {
            auto bad = quiet();
            bad.k_min = 5;
            bad.k_max = 4;
            search_mc(b3, bad);
        }(),
        Error);
}

TEST(Search, F4ExactWithinBudget)
{
    const RootSystem f4(TypeId::parse("F4"));
    auto cfg = quiet();
    cfg.time_budget = 600;
    const auto r = search_mc(f4, cfg);
    EXPECT_EQ(r.value, 6);
    EXPECT_EQ(r.status, SearchStatus::exact);
}
