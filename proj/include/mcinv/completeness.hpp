#ifndef MCINV_COMPLETENESS_HPP
#define MCINV_COMPLETENESS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcinv/coxeter.hpp"
#include "mcinv/error.hpp"
#include "mcinv/root_set.hpp"
#include "mcinv/root_system.hpp"

namespace mcinv {

enum class Provenance { constructed, embedded, search, loaded };

inline const char* to_string(Provenance p)
{
    switch (p) {
    case Provenance::constructed: return "constructed";
    case Provenance::embedded: return "embedded";
    case Provenance::search: return "search";
    case Provenance::loaded: return "loaded";
    }
    return "?";
}

/// Ordered list of distinct group elements (a candidate Y).
class Family {
public:
    explicit Family(Provenance provenance = Provenance::constructed) : provenance_(provenance) {}

    /// Appends g; rejects an element already present.
    void add(GroupElement g, std::optional<Word> word = std::nullopt)
    {
        for (const auto& m : members_)
            if (m == g) throw Error("duplicate family member");
        members_.push_back(std::move(g));
        words_.push_back(std::move(word));
    }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const GroupElement& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<GroupElement>& members() const { return members_; }
    const std::optional<Word>& word(std::size_t i) const { return words_[i]; }
    Provenance provenance() const { return provenance_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    Provenance provenance_;
    std::vector<GroupElement> members_;
    std::vector<std::optional<Word>> words_;
};

/// Number of members covering each positive root.
inline std::vector<int> coverage_counts(const RootSystem& rs, const Family& y)
{
    std::vector<int> count(static_cast<std::size_t>(rs.num_positive()), 0);
    for (const auto& g : y) inversion_set(g).for_each([&](int i) { ++count[static_cast<std::size_t>(i)]; });
    return count;
}

inline RootSet covered_roots(const RootSystem& rs, const Family& y)
{
    RootSet u(rs.num_positive());
    for (const auto& g : y) u |= inversion_set(g);
    return u;
}

inline bool is_inversion_complete(const RootSystem& rs, const Family& y) { return covered_roots(rs, y).is_full(); }

/// Roots covered by exactly one member, mapped to that member's position.
inline std::map<int, std::size_t> essential_roots(const RootSystem& rs, const Family& y)
{
    std::vector<int> owner(static_cast<std::size_t>(rs.num_positive()), -1);
    std::vector<int> count(static_cast<std::size_t>(rs.num_positive()), 0);
    for (std::size_t m = 0; m < y.size(); ++m)
        inversion_set(y[m]).for_each([&](int i) {
            ++count[static_cast<std::size_t>(i)];
            owner[static_cast<std::size_t>(i)] = static_cast<int>(m);
        });
    std::map<int, std::size_t> out;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (count[static_cast<std::size_t>(i)] == 1) out.emplace(i, static_cast<std::size_t>(owner[static_cast<std::size_t>(i)]));
    return out;
}

/// Complete, and every member owns an essential root (so no proper subfamily is complete).
inline bool is_minimal_inversion_complete(const RootSystem& rs, const Family& y)
{
    if (y.empty() || !is_inversion_complete(rs, y)) return false;
    std::vector<bool> owns(y.size(), false);
    for (auto [root, member] : essential_roots(rs, y)) owns[member] = true;
    return std::all_of(owns.begin(), owns.end(), [](bool b) { return b; });
}

inline bool is_weak_antichain(const Family& y)
{
    std::vector<RootSet> inv;
    for (const auto& g : y) inv.push_back(inversion_set(g));
    for (std::size_t a = 0; a < inv.size(); ++a)
        for (std::size_t b = 0; b < inv.size(); ++b)
            if (a != b && inv[a].subset_of(inv[b])) return false;
    return true;
}

struct RootSetLexLess {
    bool operator()(const RootSet& a, const RootSet& b) const { return lex_less(a, b); }
};

using PathSupports = std::map<int, std::vector<RootSet>>;

/// For every last sum reachable by a root path with steps in S+, the distinct
/// supports of such paths. Depth-first over (partial sum, support) states; heights
/// strictly increase along a path so the state space is finite.
inline PathSupports enumerate_root_paths(const RootSystem& rs, const RootSet& s_plus, std::size_t budget = 1'000'000)
{
    struct StateHash {
        std::size_t operator()(const std::pair<int, RootSet>& s) const
        {
            return s.second.hash() * 1315423911U + static_cast<std::size_t>(s.first);
        }
    };
    std::unordered_set<std::pair<int, RootSet>, StateHash> seen;
    std::map<int, std::set<RootSet, RootSetLexLess>> found;
    std::vector<std::pair<int, RootSet>> stack;
    const auto steps = s_plus.indices();
    for (int eta : steps) {
        RootSet sup(rs.num_positive());
        sup.insert(eta);
        if (seen.emplace(eta, sup).second) stack.emplace_back(eta, sup);
    }
    while (!stack.empty()) {
        auto [sum, sup] = stack.back();
        stack.pop_back();
        found[sum].insert(sup);
        for (int eta : steps) {
            auto next = rs.root_sum(sum, eta);
            if (!next) continue;
            RootSet nsup = sup;
            nsup.insert(eta);
            if (!seen.emplace(*next, nsup).second) continue;
            if (seen.size() > budget)
                throw BudgetExceeded("root path enumeration exceeded " + std::to_string(budget) + " states");
            stack.emplace_back(*next, nsup);
        }
    }
    PathSupports out;
    for (auto& [sum, sups] : found) out.emplace(sum, std::vector<RootSet>(sups.begin(), sups.end()));
    return out;
}

enum class Verdict { pass, fail, undecided };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecided: return "undecided";
    }
    return "?";
}

struct ConditionsReport {
    Verdict cond1 = Verdict::pass;  // supports of paths with equal last sum intersect
    Verdict cond2 = Verdict::pass;  // S = S+ u -S+ is sum-free inside the roots
    Verdict cond3 = Verdict::pass;  // S holds no root string of length >= 2

    bool none_failed() const { return cond1 != Verdict::fail && cond2 != Verdict::fail && cond3 != Verdict::fail; }
    bool all_pass() const { return cond1 == Verdict::pass && cond2 == Verdict::pass && cond3 == Verdict::pass; }
};

/// a + b = c with a, b, c all in S+. Equivalent to the signed sum-freeness of
/// S+ u -S+, since a - b in +-S+ rearranges to such a triple.
inline bool sum_free(const RootSystem& rs, const RootSet& s_plus)
{
    const auto idx = s_plus.indices();
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x + 1; y < idx.size(); ++y) {
            auto s = rs.root_sum(idx[x], idx[y]);
            if (s && s_plus.contains(*s)) return false;
        }
    return true;
}

/// No a in S and root g with a + g and a + 2g in S, where S = S+ u -S+.
inline bool string_free(const RootSystem& rs, const RootSet& s_plus)
{
    auto in_s = [&](int v) { return s_plus.contains(signed_root::index(v)); };
    const int n = rs.num_positive();
    for (int a0 : s_plus.indices())
        for (int sa : {a0, signed_root::negate(a0)})
            for (int g0 = 0; g0 < n; ++g0)
                for (int g : {g0, signed_root::negate(g0)}) {
                    auto b = rs.signed_sum(sa, g);
                    if (!b || !in_s(*b)) continue;
                    auto c = rs.signed_sum(*b, g);
                    if (c && in_s(*c)) return false;
                }
    return true;
}

inline bool supports_pairwise_intersect(const PathSupports& paths)
{
    for (const auto& [sum, sups] : paths)
        for (std::size_t a = 0; a < sups.size(); ++a)
            for (std::size_t b = a + 1; b < sups.size(); ++b)
                if (!sups[a].intersects(sups[b])) return false;
    return true;
}

/// The three necessary conditions on an essential set S+.
inline ConditionsReport check_essential_conditions(const RootSystem& rs, const RootSet& s_plus,
                                                   std::size_t path_budget = 1'000'000)
{
    ConditionsReport r;
    r.cond2 = sum_free(rs, s_plus) ? Verdict::pass : Verdict::fail;
    r.cond3 = string_free(rs, s_plus) ? Verdict::pass : Verdict::fail;
    try {
        r.cond1 = supports_pairwise_intersect(enumerate_root_paths(rs, s_plus, path_budget)) ? Verdict::pass
                                                                                              : Verdict::fail;
    } catch (const BudgetExceeded&) {
        r.cond1 = Verdict::undecided;
    }
    return r;
}

enum class GraphVariant { standard, type_c };

/// Vertex/edge encoding of a set of roots of a classical type. Vertex labels are
/// 1..n for A, {0, +-1..+-n} for B, {+-1..+-n} for C, D and the type-C variant.
struct EncodingGraph {
    std::vector<int> vertices;
    std::set<std::pair<int, int>> arcs;   // directed
    std::set<std::pair<int, int>> edges;  // undirected, stored (min, max)

    std::size_t edge_count() const { return edges.size(); }
    bool has_edge(int a, int b) const { return edges.count({std::min(a, b), std::max(a, b)}) > 0; }
};

namespace detail {

inline std::vector<std::pair<int, int>> root_arcs(const RootSystem& rs, int signed_idx, GraphVariant variant)
{
    const auto& eps = *rs.root(signed_root::index(signed_idx)).eps;
    const int sgn = signed_root::is_positive(signed_idx) ? 1 : -1;
    std::vector<std::pair<int, int>> nz;  // (1-based position, coefficient)
    for (std::size_t k = 0; k < eps.size(); ++k)
        if (eps[k] != 0) nz.emplace_back(static_cast<int>(k) + 1, sgn * static_cast<int>(eps[k].get_num().get_si()));
    if (rs.type().family == 'A') {
        // e_i - e_j -> i -> j
        const int from = nz[0].second > 0 ? nz[0].first : nz[1].first;
        const int to = nz[0].second > 0 ? nz[1].first : nz[0].first;
        return {{from, to}};
    }
    if (nz.size() == 2) {
        auto [a, ca] = nz[0];
        auto [b, cb] = nz[1];
        // ca e_a + cb e_b = sgn(i) e_|i| - sgn(j) e_|j| with i = ca a, j = -cb b
        return {{ca * a, -cb * b}, {cb * b, -ca * a}};
    }
    auto [a, c] = nz[0];
    if (c == 1 || c == -1) {
        if (variant == GraphVariant::standard) return {{c * a, 0}, {0, -c * a}};
        return {{c * a, -c * a}};
    }
    // 2e_a in type C
    return {{(c / 2) * a, -(c / 2) * a}};
}

}  // namespace detail

/// Encoding graph of a set of signed roots (directed arcs plus underlying edges).
inline EncodingGraph encoding_graph(const RootSystem& rs, const std::vector<int>& signed_roots,
                                    GraphVariant variant = GraphVariant::standard)
{
    const char f = rs.type().family;
    if (!rs.type().is_classical()) throw Error("encoding graphs exist only for classical types");
    if (f == 'A' && variant == GraphVariant::type_c) throw Error("type-C graph is not defined for type A");
    EncodingGraph g;
    const int n = rs.type().rank;
    if (f == 'A') {
        for (int i = 1; i <= n + 1; ++i) g.vertices.push_back(i);
    } else {
        for (int i = -n; i <= n; ++i)
            if (i != 0 || (f == 'B' && variant == GraphVariant::standard)) g.vertices.push_back(i);
    }
    for (int r : signed_roots)
        for (auto [a, b] : detail::root_arcs(rs, r, variant)) {
            g.arcs.emplace(a, b);
            g.edges.emplace(std::min(a, b), std::max(a, b));
        }
    return g;
}

/// Graph of the symmetric set S+ u -S+.
inline EncodingGraph encoding_graph(const RootSystem& rs, const RootSet& s_plus,
                                    GraphVariant variant = GraphVariant::standard)
{
    std::vector<int> roots;
    s_plus.for_each([&](int i) {
        roots.push_back(i);
        roots.push_back(signed_root::negate(i));
    });
    return encoding_graph(rs, roots, variant);
}

inline bool triangle_free(const EncodingGraph& g)
{
    std::map<int, std::set<int>> adj;
    for (auto [a, b] : g.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    for (auto [a, b] : g.edges)
        for (int c : adj[a])
            if (c != b && adj[b].count(c)) return false;
    return true;
}

}  // namespace mcinv

#endif  // MCINV_COMPLETENESS_HPP
