#ifndef MCINV_CONSTRUCTIONS_HPP
#define MCINV_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcinv/completeness.hpp"
#include "mcinv/coxeter.hpp"
#include "mcinv/detail/word_lists.hpp"
#include "mcinv/error.hpp"
#include "mcinv/root_set.hpp"
#include "mcinv/root_system.hpp"

namespace mcinv {

/// Which explicit family to build: the type it lives in, plus k for the
/// dihedral family {(s1 s2 ...) of length m-k, (s2 s1 ...) of length k}.
struct FamilyId {
    TypeId type;
    int dihedral_k = 1;

    static FamilyId parse(const std::string& text)
    {
        FamilyId id;
        auto comma = text.find(',');
        id.type = TypeId::parse(text.substr(0, comma));
        if (comma != std::string::npos) id.dihedral_k = std::stoi(text.substr(comma + 1));
        id.validate();
        return id;
    }

    void validate() const
    {
        type.validate();
        const char f = type.family;
        if (f == 'I' && (dihedral_k < 1 || dihedral_k > type.dihedral_m - 1))
            throw Error("dihedral parameter k must lie in 1..m-1");
        if (f == 'G' && (dihedral_k < 1 || dihedral_k > 5)) throw Error("dihedral parameter k must lie in 1..5");
    }

    std::string str() const
    {
        if (type.family == 'I' || type.family == 'G') return type.str() + "," + std::to_string(dihedral_k);
        return type.str();
    }
};

/// How a printed word s_{i1} ... s_{ik} is turned into a product.
enum class WordConvention { left_to_right, right_to_left };

inline Word apply_convention(Word w, WordConvention c)
{
    if (c == WordConvention::right_to_left) std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

inline std::vector<Word> table_words(std::string_view text) { return parse_word_list(std::string(text)); }

/// Row r of the F4 table must own its root: in N(w_r) and in no other N(w_s).
inline bool f4_table_consistent(const RootSystem& f4, WordConvention c)
{
    std::vector<RootSet> inv;
    for (const auto& row : detail::f4_table)
        inv.push_back(inversion_set(element_from_word(f4, apply_convention(parse_word(std::string(row.word)), c))));
    for (std::size_t r = 0; r < detail::f4_table.size(); ++r) {
        const auto& c4 = detail::f4_table[r].root;
        auto idx = f4.find(std::vector<int>(c4.begin(), c4.end()));
        if (!idx) return false;
        for (std::size_t s = 0; s < inv.size(); ++s)
            if (inv[s].contains(*idx) != (s == r)) return false;
    }
    return true;
}

/// The word convention, fixed once by checking the F4 table under left-to-right
/// first and right-to-left second.
inline WordConvention word_convention()
{
    static const WordConvention c = [] {
        const RootSystem f4(TypeId{'F', 4, 0});
        if (f4_table_consistent(f4, WordConvention::left_to_right)) return WordConvention::left_to_right;
        if (f4_table_consistent(f4, WordConvention::right_to_left)) return WordConvention::right_to_left;
        throw Error("F4 table is inconsistent under both word conventions");
    }();
    return c;
}

namespace detail {

inline void require_classical(const RootSystem& rs, std::string_view families)
{
    if (families.find(rs.type().family) == std::string_view::npos)
        throw Error("construction not available for type " + rs.type().str());
}

inline int eps_pair(const RootSystem& rs, int i, int si, int j, int sj)
{
    return rs.eps_root({{i, si}, {j, sj}});
}

}  // namespace detail

/// The distinguished essential sets: P(A_{n-1}), P(B_n), P(D_n) and the F4 table roots.
inline RootSet p_set(const RootSystem& rs)
{
    const TypeId& t = rs.type();
    RootSet p(rs.num_positive());
    switch (t.family) {
    case 'A': {
        const int n = t.rank + 1;
        const int lo = n / 2, hi = (n + 1) / 2;
        for (int i = 1; i <= lo; ++i)
            for (int j = 1; j <= hi; ++j) p.insert(detail::eps_pair(rs, i, 1, n - j + 1, -1));
        break;
    }
    case 'B':
    case 'D': {
        const int n = t.rank;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) p.insert(detail::eps_pair(rs, i, 1, j, 1));
        if (t.family == 'B') p.insert(rs.eps_root({{1, 1}}));
        break;
    }
    case 'F':
        for (const auto& row : detail::f4_table) p.insert(*rs.find(std::vector<int>(row.root.begin(), row.root.end())));
        break;
    default: throw Error("no P-set for type " + t.str());
    }
    return p;
}

/// The biclosed set L(gamma) attached to gamma in the P-set (types A, B, D).
inline RootSet l_gamma(const RootSystem& rs, int gamma)
{
    detail::require_classical(rs, "ABD");
    const RootSet p = p_set(rs);
    if (!p.contains(gamma)) throw Error("root " + rs.eps_str(gamma) + " is not in the P-set");
    RootSet l(rs.num_positive());
    l.insert(gamma);
    const int n = rs.type().rank;
    if (rs.type().family == 'A') {
        // alpha outside P with gamma - alpha a positive root
        for (int a = 0; a < rs.num_positive(); ++a) {
            if (p.contains(a)) continue;
            for (int b = 0; b < rs.num_positive(); ++b)
                if (rs.root_sum(a, b) == gamma) {
                    l.insert(a);
                    break;
                }
        }
        return l;
    }
    const auto& e = *rs.root(gamma).eps;
    std::vector<int> support;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) support.push_back(static_cast<int>(k) + 1);
    if (support.size() == 1) {
        // gamma = e1 (type B)
        for (int h = 2; h <= n; ++h) l.insert(detail::eps_pair(rs, 1, 1, h, -1));
        return l;
    }
    const int i = support[0], j = support[1];
    if (rs.type().family == 'B') l.insert(rs.eps_root({{j, 1}}));
    for (int h = i + 1; h <= n; ++h)
        if (h != j) l.insert(detail::eps_pair(rs, i, 1, h, -1));
    for (int h = j + 1; h <= n; ++h) l.insert(detail::eps_pair(rs, j, 1, h, -1));
    return l;
}

/// A family built from explicit words, with the positions of any word whose
/// length differs from |N(w)| (non-reduced words are kept, and flagged).
struct WordFamily {
    Family family;
    std::vector<std::size_t> nonreduced;
};

inline WordFamily family_from_words(const RootSystem& rs, const std::vector<Word>& words, Provenance provenance,
                                    WordConvention convention = WordConvention::left_to_right)
{
    WordFamily out{Family(provenance), {}};
    for (std::size_t k = 0; k < words.size(); ++k) {
        const Word w = apply_convention(words[k], convention);
        GroupElement g = element_from_word(rs, w);
        if (static_cast<std::size_t>(g.length()) != w.size()) out.nonreduced.push_back(k);
        out.family.add(std::move(g), words[k]);
    }
    return out;
}

inline std::vector<Word> dihedral_words(int m, int k)
{
    auto alternating = [](int first, int len) {
        Word w;
        for (int i = 0; i < len; ++i) w.letters.push_back(i % 2 == 0 ? first : 3 - first);
        return w;
    };
    return {alternating(1, m - k), alternating(2, k)};
}

/// Expected family sizes by type.
inline std::size_t expected_family_size(const TypeId& t)
{
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
    case 'A': return (n + 1) * (n + 1) / 4;
    case 'B':
    case 'C': return n * (n - 1) / 2 + 1;
    case 'D': return n * (n - 1) / 2;
    case 'E': return n == 6 ? 16 : n == 7 ? 27 : 36;
    case 'F': return 6;
    case 'H': return n == 3 ? 5 : 8;
    default: return 2;
    }
}

/// The explicit family for a type, with reducedness flags for word-built ones.
inline WordFamily y_family_detailed(const RootSystem& rs, const FamilyId& id)
{
    id.validate();
    if (!(id.type == rs.type())) throw Error("family " + id.str() + " does not match type " + rs.type().str());
    const char f = rs.type().family;
    switch (f) {
    case 'A':
    case 'B':
    case 'D': {
        WordFamily out{Family(Provenance::constructed), {}};
        p_set(rs).for_each([&](int gamma) {
            GroupElement g = element_from_biclosed(rs, l_gamma(rs, gamma));
            Word w = reduced_word(rs, g);
            out.family.add(std::move(g), std::move(w));
        });
        return out;
    }
    case 'C': {
        // Same group as B_n; transport the B_n elements through reduced words.
        const RootSystem b(dual_type(rs.type()));
        const WordFamily fb = y_family_detailed(b, FamilyId{b.type(), 1});
        std::vector<Word> words;
        for (const auto& g : fb.family) words.push_back(reduced_word(b, g));
        auto out = family_from_words(rs, words, Provenance::constructed);
        return out;
    }
    case 'F': {
        std::vector<Word> words;
        for (const auto& row : detail::f4_table) words.push_back(parse_word(std::string(row.word)));
        return family_from_words(rs, words, Provenance::embedded, word_convention());
    }
    case 'E': {
        const int n = rs.type().rank;
        const std::string_view text = n == 6 ? detail::words_E6 : n == 7 ? detail::words_E7 : detail::words_E8;
        return family_from_words(rs, table_words(text), Provenance::embedded, word_convention());
    }
    case 'H': {
        const std::string_view text = rs.type().rank == 3 ? detail::words_H3 : detail::words_H4;
        return family_from_words(rs, table_words(text), Provenance::embedded, word_convention());
    }
    case 'G':
        return family_from_words(rs, dihedral_words(6, id.dihedral_k), Provenance::constructed);
    case 'I':
        return family_from_words(rs, dihedral_words(rs.type().dihedral_m, id.dihedral_k), Provenance::constructed);
    default: throw Error("no family for type " + rs.type().str());
    }
}

inline Family y_family(const RootSystem& rs, const FamilyId& id) { return y_family_detailed(rs, id).family; }
inline Family y_family(const RootSystem& rs) { return y_family(rs, FamilyId{rs.type(), 1}); }

/// Essential roots of each member (possibly several per member).
inline std::vector<std::vector<int>> essential_roots_by_member(const RootSystem& rs, const Family& y)
{
    std::vector<std::vector<int>> out(y.size());
    for (auto [root, member] : essential_roots(rs, y)) out[member].push_back(root);
    return out;
}

/// One essential root per member: the P-set for A, B, D, F4 families, otherwise
/// the lowest-index essential root of each member.
inline RootSet essential_set_of_family(const RootSystem& rs, const FamilyId& id)
{
    const Family y = y_family(rs, id);
    if (!is_minimal_inversion_complete(rs, y)) throw Error("family " + id.str() + " is not minimal inversion complete");
    const char f = rs.type().family;
    if (f == 'A' || f == 'B' || f == 'D' || f == 'F') {
        const RootSet p = p_set(rs);
        const auto ess = essential_roots(rs, y);
        std::vector<bool> hit(y.size(), false);
        bool ok = true;
        p.for_each([&](int gamma) {
            auto it = ess.find(gamma);
            if (it == ess.end() || hit[it->second]) ok = false;
            else hit[it->second] = true;
        });
        if (!ok) throw Error("P-set is not an essential set of family " + id.str());
        return p;
    }
    RootSet s(rs.num_positive());
    for (const auto& roots : essential_roots_by_member(rs, y)) s.insert(roots.front());
    return s;
}

/// True iff every member has exactly one essential root (the essential set is unique).
inline bool essential_set_is_unique(const RootSystem& rs, const Family& y)
{
    for (const auto& roots : essential_roots_by_member(rs, y))
        if (roots.size() != 1) return false;
    return true;
}

}  // namespace mcinv

#endif  // MCINV_CONSTRUCTIONS_HPP
