#include <gtest/gtest.h>

#include "mcinv/completeness.hpp"
#include "mcinv/coxeter.hpp"

using namespace mcinv;

namespace {

Family family(const RootSystem& rs, std::initializer_list<const char*> words)
{
    Family y;
    for (const char* w : words) y.add(element_from_word(rs, parse_word(w)), parse_word(w));
    return y;
}

RootSet roots(const RootSystem& rs, std::initializer_list<std::vector<int>> coords)
{
    RootSet s(rs.num_positive());
    for (const auto& c : coords) s.insert(*rs.find(c));
    return s;
}

}  // namespace

TEST(Family, RejectsDuplicates)
{
    const RootSystem a2(TypeId::parse("A2"));
    Family y;
    y.add(element_from_word(a2, parse_word("1 2 1")));
    EXPECT_THROW(y.add(element_from_word(a2, parse_word("2 1 2"))), Error);
}

TEST(Completeness, Examples)
{
    const RootSystem a2(TypeId::parse("A2"));
    const auto w0 = family(a2, {"1 2 1"});
    EXPECT_TRUE(is_inversion_complete(a2, w0));
    EXPECT_TRUE(is_minimal_inversion_complete(a2, w0));
    EXPECT_EQ(essential_roots(a2, w0).size(), 3U);
    const auto e = family(a2, {""});
    EXPECT_FALSE(is_inversion_complete(a2, e));
    const auto pair = family(a2, {"1 2", "2 1"});
    EXPECT_TRUE(is_inversion_complete(a2, pair));
    EXPECT_TRUE(is_minimal_inversion_complete(a2, pair));
    const auto ess = essential_roots(a2, pair);
    EXPECT_EQ(ess.size(), 2U);
    EXPECT_EQ(ess.at(a2.simple_index(0)), 0U);
    EXPECT_EQ(ess.at(a2.simple_index(1)), 1U);
    const auto redundant = family(a2, {"1 2 1", "1"});
    EXPECT_TRUE(is_inversion_complete(a2, redundant));
    EXPECT_FALSE(is_minimal_inversion_complete(a2, redundant));
    EXPECT_FALSE(essential_roots(a2, redundant).count(a2.simple_index(0)));
    EXPECT_FALSE(is_minimal_inversion_complete(a2, Family{}));
}

TEST(Antichain, Examples)
{
    const RootSystem a2(TypeId::parse("A2"));
    EXPECT_TRUE(is_weak_antichain(family(a2, {"1"})));
    EXPECT_FALSE(is_weak_antichain(family(a2, {"", "1"})));
    EXPECT_TRUE(is_weak_antichain(family(a2, {"1 2", "2 1"})));
}

TEST(RootPaths, Examples)
{
    const RootSystem a2(TypeId::parse("A2"));
    const int a1 = *a2.find(std::vector<int>{1, 0}), a2i = *a2.find(std::vector<int>{0, 1}),
              th = *a2.find(std::vector<int>{1, 1});
    auto p = enumerate_root_paths(a2, roots(a2, {{1, 0}}));
    ASSERT_EQ(p.size(), 1U);
    EXPECT_EQ(p.at(a1).size(), 1U);
    p = enumerate_root_paths(a2, roots(a2, {{1, 0}, {0, 1}}));
    ASSERT_EQ(p.at(th).size(), 1U);
    EXPECT_EQ(p.at(th)[0], roots(a2, {{1, 0}, {0, 1}}));
    p = enumerate_root_paths(a2, RootSet::full(3));
    EXPECT_EQ(p.at(th).size(), 2U);
    EXPECT_EQ(p.at(a2i).size(), 1U);
    EXPECT_THROW(enumerate_root_paths(RootSystem(TypeId::parse("E6")), RootSet::full(36), 100), BudgetExceeded);
}

TEST(Conditions, Examples)
{
    const RootSystem a2(TypeId::parse("A2"));
    auto r = check_essential_conditions(a2, RootSet::full(3));
    EXPECT_EQ(r.cond2, Verdict::fail);
    r = check_essential_conditions(a2, roots(a2, {{1, 0}, {0, 1}}));
    EXPECT_TRUE(r.all_pass());
    // a root string a, a+g, a+2g: B2 with short e2, long e1-e2 and e1+e2
    const RootSystem b2(TypeId::parse("B2"));
    RootSet s(4);
    s.insert(b2.eps_root({{1, 1}, {2, -1}}));
    s.insert(b2.eps_root({{1, 1}, {2, 1}}));
    EXPECT_EQ(check_essential_conditions(b2, s).cond3, Verdict::pass);
    s.insert(b2.eps_root({{1, 1}}));
    EXPECT_EQ(check_essential_conditions(b2, s).cond3, Verdict::fail);
    // undecided on a tiny path budget
    const RootSystem e6(TypeId::parse("E6"));
    EXPECT_EQ(check_essential_conditions(e6, RootSet::full(36), 50).cond1, Verdict::undecided);
}

TEST(EncodingGraph, Examples)
{
    const RootSystem a2(TypeId::parse("A2"));
    auto g = encoding_graph(a2, roots(a2, {{1, 0}}));
    EXPECT_EQ(g.edge_count(), 1U);
    EXPECT_TRUE(g.has_edge(1, 2));
    EXPECT_TRUE(triangle_free(g));
    EXPECT_FALSE(triangle_free(encoding_graph(a2, RootSet::full(3))));
    EXPECT_EQ(encoding_graph(a2, RootSet(3)).edge_count(), 0U);

    const RootSystem b2(TypeId::parse("B2"));
    RootSet e1(4);
    e1.insert(b2.eps_root({{1, 1}}));
    g = encoding_graph(b2, e1);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_TRUE(g.has_edge(0, -1));
    EXPECT_EQ(g.edge_count(), 2U);
    EXPECT_TRUE(g.arcs.count({1, 0}) && g.arcs.count({0, -1}));
    g = encoding_graph(b2, e1, GraphVariant::type_c);
    EXPECT_TRUE(g.has_edge(1, -1));
    EXPECT_EQ(g.edge_count(), 1U);
    EXPECT_THROW(encoding_graph(RootSystem(TypeId::parse("F4")), RootSet(24)), Error);
}

TEST(EncodingGraph, InvolutionClosed)
{
    for (const char* t : {"B3", "C3", "D4"}) {
        const RootSystem rs(TypeId::parse(t));
        for (int i = 0; i < rs.num_positive(); ++i) {
            RootSet s(rs.num_positive());
            s.insert(i);
            const auto g = encoding_graph(rs, s);
            for (auto [a, b] : g.edges) EXPECT_TRUE(g.has_edge(-a, -b));
        }
    }
}

TEST(TriangleFree, Bipartite)
{
    EncodingGraph g;
    g.edges = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
    EXPECT_TRUE(triangle_free(g));
    g.edges.insert({1, 2});
    EXPECT_FALSE(triangle_free(g));
}
