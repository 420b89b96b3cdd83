#ifndef MCINV_COXETER_HPP
#define MCINV_COXETER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "mcinv/error.hpp"
#include "mcinv/root_set.hpp"
#include "mcinv/root_system.hpp"

namespace mcinv {

/// Sequence of 1-based generator indices, read left to right as a product.
struct Word {
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    std::string str() const
    {
        std::string s;
        for (int l : letters) s += (s.empty() ? "" : " ") + std::to_string(l);
        return s;
    }

    friend bool operator==(const Word&, const Word&) = default;
};

inline Word parse_word(const std::string& line)
{
    Word w;
    std::string text = line.substr(0, line.find('#'));
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (!tok.empty() && (tok[0] == 's' || tok[0] == 'S')) tok = tok.substr(1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw Error("bad generator '" + tok + "'");
        }
        if (used != tok.size()) throw Error("bad generator '" + tok + "'");
        w.letters.push_back(v);
    }
    return w;
}

/// Word-list text format: one word per line, whitespace-separated 1-based
/// generators, `#` starts a comment. Blank lines are skipped; a line holding
/// only `e` is the empty word.
inline std::vector<Word> parse_word_list(std::istream& in)
{
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string body = line.substr(0, line.find('#'));
        auto first = body.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = body.find_last_not_of(" \t\r");
        if (body.substr(first, last - first + 1) == "e") {
            words.emplace_back();
            continue;
        }
        words.push_back(parse_word(body));
    }
    return words;
}

inline std::vector<Word> parse_word_list(const std::string& text)
{
    std::istringstream in(text);
    return parse_word_list(in);
}

inline std::string format_word_list(const std::vector<Word>& words)
{
    std::string out;
    for (const auto& w : words) out += (w.empty() ? std::string("e") : w.str()) + "\n";
    return out;
}

/// Group element as its action on the positive roots: `image(i)` is the signed
/// root w(a_i). Two elements are equal iff these tables are equal.
class GroupElement {
public:
    GroupElement() = default;

    static GroupElement identity(const RootSystem& rs)
    {
        GroupElement g;
        g.perm_.resize(static_cast<std::size_t>(rs.num_positive()));
        for (int i = 0; i < rs.num_positive(); ++i) g.perm_[static_cast<std::size_t>(i)] = i;
        return g;
    }

    int num_positive() const { return static_cast<int>(perm_.size()); }
    int length() const { return length_; }
    bool is_identity() const { return length_ == 0; }

    int image(int i) const { return perm_[static_cast<std::size_t>(i)]; }

    /// w(x) for a signed root x.
    int apply(int x) const
    {
        const int r = perm_[static_cast<std::size_t>(signed_root::index(x))];
        return signed_root::is_positive(x) ? r : signed_root::negate(r);
    }

    const std::vector<int>& table() const { return perm_; }

    /// w * s_k (k 0-based): w s_k (a_i) = w(s_k(a_i)).
    GroupElement times_generator(const RootSystem& rs, int k) const
    {
        GroupElement g;
        g.perm_.resize(perm_.size());
        const auto& refl = rs.reflection_table(k);
        for (std::size_t i = 0; i < perm_.size(); ++i) g.perm_[i] = apply(refl[i]);
        g.recount();
        return g;
    }

    /// s_k * w.
    GroupElement generator_times(const RootSystem& rs, int k) const
    {
        GroupElement g;
        g.perm_.resize(perm_.size());
        const auto& refl = rs.reflection_table(k);
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            const int x = perm_[i];
            const int r = refl[static_cast<std::size_t>(signed_root::index(x))];
            g.perm_[i] = signed_root::is_positive(x) ? r : signed_root::negate(r);
        }
        g.recount();
        return g;
    }

    friend GroupElement operator*(const GroupElement& u, const GroupElement& v)
    {
        if (u.perm_.size() != v.perm_.size()) throw Error("elements of different groups");
        GroupElement g;
        g.perm_.resize(u.perm_.size());
        for (std::size_t i = 0; i < v.perm_.size(); ++i) g.perm_[i] = u.apply(v.perm_[i]);
        g.recount();
        return g;
    }

    GroupElement inverse() const
    {
        GroupElement g;
        g.perm_.resize(perm_.size());
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            const int x = perm_[i];
            const int j = signed_root::index(x);
            const int back = static_cast<int>(i);
            g.perm_[static_cast<std::size_t>(j)] = signed_root::is_positive(x) ? back : signed_root::negate(back);
        }
        g.length_ = length_;
        return g;
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.perm_ == b.perm_; }

    /// Right descent at generator k: l(w s_k) < l(w), i.e. w(a_k) < 0.
    bool has_right_descent(const RootSystem& rs, int k) const
    {
        return !signed_root::is_positive(image(rs.simple_index(k)));
    }

private:
    void recount()
    {
        length_ = 0;
        for (int x : perm_)
            if (!signed_root::is_positive(x)) ++length_;
    }

    std::vector<int> perm_;
    int length_ = 0;
};

inline GroupElement element_from_word(const RootSystem& rs, const Word& w)
{
    GroupElement g = GroupElement::identity(rs);
    for (int letter : w.letters) {
        if (letter < 1 || letter > rs.rank())
            throw Error("generator " + std::to_string(letter) + " out of range for " + rs.type().str());
        g = g.times_generator(rs, letter - 1);
    }
    return g;
}

/// N(w) = { a > 0 : w^{-1}(a) < 0 } = { -w(b) : b > 0, w(b) < 0 }.
inline RootSet inversion_set(const GroupElement& g)
{
    RootSet s(g.num_positive());
    for (int i = 0; i < g.num_positive(); ++i) {
        const int x = g.image(i);
        if (!signed_root::is_positive(x)) s.insert(signed_root::index(x));
    }
    return s;
}

/// A reduced word, built by peeling off the lowest right descent each step.
inline Word reduced_word(const RootSystem& rs, const GroupElement& g)
{
    std::vector<int> rev;
    GroupElement cur = g;
    while (!cur.is_identity()) {
        int k = 0;
        while (!cur.has_right_descent(rs, k)) ++k;
        rev.push_back(k + 1);
        cur = cur.times_generator(rs, k);
    }
    return Word{{rev.rbegin(), rev.rend()}};
}

/// Closed and coclosed: for g in the open cone of a and b, a, b in L forces g in L
/// and a, b outside L forces g outside L. (Root sums alone are enough only in the
/// crystallographic case.)
inline bool is_biclosed(const RootSystem& rs, const RootSet& l)
{
    for (const auto& [a, b, g] : rs.cone_triples()) {
        const bool ia = l.contains(a), ib = l.contains(b), ig = l.contains(g);
        if (ia && ib && !ig) return false;
        if (!ia && !ib && ig) return false;
    }
    return true;
}

/// The unique w with N(w) = L: repeatedly strip the lowest-index simple root in L.
inline GroupElement element_from_biclosed(const RootSystem& rs, const RootSet& l)
{
    if (l.universe() != rs.num_positive()) throw Error("root set universe does not match root system");
    if (!is_biclosed(rs, l)) throw Error("set " + l.str() + " is not biclosed");
    std::vector<int> prefix;
    RootSet cur = l;
    while (!cur.empty()) {
        int k = -1;
        for (int g = 0; g < rs.rank(); ++g)
            if (cur.contains(rs.simple_index(g)) && (k < 0 || rs.simple_index(g) < rs.simple_index(k))) k = g;
        if (k < 0) throw Error("set " + l.str() + " is not an inversion set");
        RootSet next(rs.num_positive());
        cur.for_each([&](int i) {
            if (i == rs.simple_index(k)) return;
            const int img = rs.reflect(k, i);
            if (!signed_root::is_positive(img)) throw Error("set " + l.str() + " is not an inversion set");
            next.insert(img);
        });
        prefix.push_back(k + 1);
        cur = next;
    }
    GroupElement g = element_from_word(rs, Word{prefix});
    if (inversion_set(g) != l) throw Error("set " + l.str() + " is not an inversion set");
    return g;
}

/// Right weak order: N(a) subset of N(b).
inline bool weak_leq(const GroupElement& a, const GroupElement& b)
{
    return inversion_set(a).subset_of(inversion_set(b));
}

/// The reflection s_a for positive root i, by conjugating down to a simple root.
inline GroupElement reflection_of_root(const RootSystem& rs, int i)
{
    if (i < 0 || i >= rs.num_positive()) throw Error("root index out of range");
    std::vector<int> path;
    int cur = i;
    while (rs.simple_position(cur) < 0) {
        int k = 0;
        for (; k < rs.rank(); ++k) {
            const int img = rs.reflect(k, cur);
            if (signed_root::is_positive(img) && img < cur) break;
        }
        if (k == rs.rank()) throw Error("no descending reflection for root " + std::to_string(i));
        path.push_back(k);
        cur = rs.reflect(k, cur);
    }
    // a = s_{k1} ... s_{kr}(a_j), so s_a = s_{k1}..s_{kr} s_j s_{kr}..s_{k1}.
    Word w;
    for (int k : path) w.letters.push_back(k + 1);
    w.letters.push_back(rs.simple_position(cur) + 1);
    for (auto it = path.rbegin(); it != path.rend(); ++it) w.letters.push_back(*it + 1);
    return element_from_word(rs, w);
}

/// All reflections, indexed by positive root.
inline std::vector<GroupElement> all_reflections(const RootSystem& rs)
{
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(rs.num_positive()));
    for (int i = 0; i < rs.num_positive(); ++i) out.push_back(reflection_of_root(rs, i));
    return out;
}

/// Reflection inversions {s_a : a in N(w)}, reported by root index of a.
inline RootSet reflection_inversions(const GroupElement& g) { return inversion_set(g); }

/// Length-based form {t in R : l(tw) < l(w)}, reported by root index of t.
/// (Multiplying on the right instead gives the inversion set of w^{-1}.)
inline RootSet reflection_inversions_by_length(const GroupElement& g, const std::vector<GroupElement>& reflections)
{
    RootSet s(g.num_positive());
    for (std::size_t t = 0; t < reflections.size(); ++t)
        if ((reflections[t] * g).length() < g.length()) s.insert(static_cast<int>(t));
    return s;
}

/// Length by greedy descent: multiply by shortening generators until the identity.
inline int length_by_descent(const RootSystem& rs, const GroupElement& g)
{
    int len = 0;
    GroupElement cur = g;
    const GroupElement e = GroupElement::identity(rs);
    while (!(cur == e)) {
        int k = 0;
        while (k < rs.rank() && signed_root::is_positive(cur.image(rs.simple_index(k)))) ++k;
        if (k == rs.rank()) throw Error("nonidentity element without descent");
        cur = cur.times_generator(rs, k);
        ++len;
    }
    return len;
}

/// Every element of W with its inversion set, each generated once from its
/// parent w' = w s_k where k is the lowest right descent of w. Depth-first with a
/// table stack, so memory is |W| root sets plus O(l(w0) * |positive roots|).
inline std::vector<RootSet> enumerate_inversion_sets(const RootSystem& rs, std::size_t cap)
{
    std::vector<RootSet> out;
    struct Frame {
        GroupElement g;
        RootSet inv;
        int next_gen;
    };
    std::vector<Frame> stack;
    stack.push_back({GroupElement::identity(rs), RootSet(rs.num_positive()), 0});
    out.push_back(stack.back().inv);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_gen == rs.rank()) {
            stack.pop_back();
            continue;
        }
        const int k = f.next_gen++;
        const int img = f.g.image(rs.simple_index(k));
        if (!signed_root::is_positive(img)) continue;  // w s_k shorter
        GroupElement child = f.g.times_generator(rs, k);
        int lowest = 0;
        while (!child.has_right_descent(rs, lowest)) ++lowest;
        if (lowest != k) continue;
        RootSet inv = f.inv;
        inv.insert(img);
        if (out.size() >= cap) throw BudgetExceeded("group has more than " + std::to_string(cap) + " elements");
        out.push_back(inv);
        stack.push_back({std::move(child), inv, 0});
    }
    return out;
}

inline std::size_t group_order(const RootSystem& rs, std::size_t cap = 10'000'000)
{
    return enumerate_inversion_sets(rs, cap).size();
}

}  // namespace mcinv

#endif  // MCINV_COXETER_HPP
