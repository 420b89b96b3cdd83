#ifndef MCINV_ROOT_SYSTEM_HPP
#define MCINV_ROOT_SYSTEM_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cctype>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcinv/error.hpp"
#include "mcinv/root_set.hpp"
#include "mcinv/scalar.hpp"

namespace mcinv {

/// Finite irreducible type: family letter, rank, and m for I2(m).
struct TypeId {
    char family = 'A';
    int rank = 1;
    int dihedral_m = 0;

    bool is_crystallographic() const { return family != 'H' && family != 'I'; }
    bool is_classical() const { return family == 'A' || family == 'B' || family == 'C' || family == 'D'; }
    bool is_simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }

    void validate() const
    {
        const bool ok = [&] {
            switch (family) {
            case 'A': return rank >= 1;
            case 'B':
            case 'C': return rank >= 2;
            case 'D': return rank >= 4;
            case 'E': return rank >= 6 && rank <= 8;
            case 'F': return rank == 4;
            case 'G': return rank == 2;
            case 'H': return rank == 3 || rank == 4;
            case 'I': return rank == 2 && dihedral_m >= 3;
            default: return false;
            }
        }();
        if (!ok) throw Error("invalid type " + str());
        if (family == 'I' && dihedral_m > 1000) throw Error("I2(m) supported for m <= 1000");
    }

    std::string str() const
    {
        if (family == 'I') return "I2:" + std::to_string(dihedral_m);
        return std::string(1, family) + std::to_string(rank);
    }

    /// Accepts `A5`, `B3`, `E8`, `H4`, `I2:7` (also `I2(7)`).
    static TypeId parse(const std::string& text)
    {
        std::string t;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.size() < 2) throw Error("cannot parse type '" + text + "'");
        TypeId id;
        id.family = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
        try {
            if (id.family == 'I') {
                auto pos = t.find_first_of(":(");
                if (pos == std::string::npos || t.substr(1, pos - 1) != "2") throw Error("");
                std::string m = t.substr(pos + 1);
                if (!m.empty() && m.back() == ')') m.pop_back();
                std::size_t used = 0;
                id.rank = 2;
                id.dihedral_m = std::stoi(m, &used);
                if (used != m.size()) throw Error("");
            } else {
                std::size_t used = 0;
                id.rank = std::stoi(t.substr(1), &used);
                if (used != t.size() - 1) throw Error("");
            }
        } catch (const std::exception&) {
            throw Error("cannot parse type '" + text + "'");
        }
        id.validate();
        return id;
    }

    friend bool operator==(const TypeId&, const TypeId&) = default;
};

/// Signed root encoding used by all index tables: v >= 0 is positive root v,
/// v < 0 is the negative of positive root ~v.
namespace signed_root {
inline constexpr int negate(int v) { return ~v; }
inline constexpr bool is_positive(int v) { return v >= 0; }
inline constexpr int index(int v) { return v >= 0 ? v : ~v; }
}  // namespace signed_root

struct Root {
    std::vector<AlgebraicScalar> coords;            // simple-root basis
    std::optional<std::vector<Rational>> eps;       // classical types only
};

using CoxeterMatrix = std::vector<std::vector<int>>;

/// Positive roots of a finite irreducible root system with the index tables
/// everything else is built on. Immutable once constructed.
///
/// Crystallographic types use the usual Bourbaki normalisation (F4 numbered so
/// that a1, a2 are short); H3, H4 and I2(m) use the canonical geometric
/// representation with (a_s, a_t) = -cos(pi/m_st) over Q(2cos(pi/m)).
class RootSystem {
public:
    explicit RootSystem(TypeId type) : type_(type)
    {
        type_.validate();
        setup_simple_data();
        enumerate_roots();
        build_tables();
    }

    const TypeId& type() const { return type_; }
    int rank() const { return static_cast<int>(gram_.size()); }
    int num_positive() const { return static_cast<int>(roots_.size()); }
    const FieldPtr& field() const { return field_; }

    const Root& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }
    const std::vector<Root>& positive_roots() const { return roots_; }

    /// Index of simple root a_{k+1} (k is 0-based).
    int simple_index(int k) const { return simple_.at(static_cast<std::size_t>(k)); }
    const std::vector<int>& simple_indices() const { return simple_; }
    /// 0-based generator k if root i is simple, else -1.
    int simple_position(int i) const { return simple_pos_[static_cast<std::size_t>(i)]; }

    /// Index of a_i + a_j if it is a positive root, else nullopt.
    std::optional<int> root_sum(int i, int j) const
    {
        const int v = sum_[flat(i, j)];
        if (v < 0) return std::nullopt;
        return v;
    }

    /// All (a, b, g) with a < b and g = s*a + t*b for some s, t > 0. Closure
    /// under these triples is what biclosedness means outside the
    /// crystallographic case, where plain root sums do not suffice.
    const std::vector<std::array<int, 3>>& cone_triples() const { return cone_; }

    /// Sum of two signed roots, as a signed root, if it is a root.
    std::optional<int> signed_sum(int x, int y) const
    {
        using namespace signed_root;
        const int a = index(x), b = index(y);
        int v = -1;
        bool found = false;
        if (is_positive(x) && is_positive(y)) {
            v = sum_[flat(a, b)];
            found = v >= 0;
        } else if (!is_positive(x) && !is_positive(y)) {
            v = sum_[flat(a, b)];
            found = v >= 0;
            v = negate(v);
        } else {
            // a - b (x positive) or b - a (y positive)
            v = is_positive(x) ? diff_[flat(a, b)] : diff_[flat(b, a)];
            found = v != no_root;
        }
        if (!found) return std::nullopt;
        return v;
    }

    /// Signed index of s_k(a_i), k a 0-based generator.
    int reflect(int k, int i) const { return refl_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; }
    const std::vector<int>& reflection_table(int k) const { return refl_.at(static_cast<std::size_t>(k)); }

    const std::vector<std::vector<AlgebraicScalar>>& gram() const { return gram_; }
    const CoxeterMatrix& coxeter_matrix() const { return coxeter_; }

    AlgebraicScalar inner_product(const std::vector<AlgebraicScalar>& x, const std::vector<AlgebraicScalar>& y) const
    {
        AlgebraicScalar acc(field_);
        for (std::size_t a = 0; a < x.size(); ++a) {
            if (x[a].is_zero()) continue;
            AlgebraicScalar row(field_);
            for (std::size_t b = 0; b < y.size(); ++b)
                if (!y[b].is_zero()) row += gram_[a][b] * y[b];
            acc += x[a] * row;
        }
        return acc;
    }

    AlgebraicScalar inner_product(int i, int j) const { return inner_product(root(i).coords, root(j).coords); }

    /// Sum of simple-root coefficients.
    AlgebraicScalar height(int i) const
    {
        AlgebraicScalar h(field_);
        for (const auto& c : root(i).coords) h += c;
        return h;
    }

    std::optional<int> highest_root_index() const { return highest_; }

    std::optional<int> find(const std::vector<AlgebraicScalar>& coords) const
    {
        auto it = index_.find(coords);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Signed lookup: positive or negative root with these coordinates.
    std::optional<int> find_signed(const std::vector<AlgebraicScalar>& coords) const
    {
        if (auto p = find(coords)) return *p;
        std::vector<AlgebraicScalar> neg;
        neg.reserve(coords.size());
        for (const auto& c : coords) neg.push_back(-c);
        if (auto p = find(neg)) return signed_root::negate(*p);
        return std::nullopt;
    }

    /// Lookup by integer simple-root coefficients.
    std::optional<int> find(const std::vector<int>& coeffs) const
    {
        std::vector<AlgebraicScalar> c;
        for (int v : coeffs) c.emplace_back(field_, Rational(v));
        return find(c);
    }

    std::optional<int> find_eps(const std::vector<Rational>& eps) const
    {
        auto it = eps_index_.find(eps);
        if (it == eps_index_.end()) return std::nullopt;
        return it->second;
    }

    /// Lookup by integer epsilon coordinates (classical types).
    std::optional<int> find_eps(const std::vector<int>& eps) const
    {
        std::vector<Rational> e;
        for (int v : eps) e.emplace_back(v);
        return find_eps(e);
    }

    /// Epsilon-space dimension: n+1 for A_n, n otherwise; 0 when not classical.
    int eps_dimension() const
    {
        if (!type_.is_classical()) return 0;
        return type_.family == 'A' ? type_.rank + 1 : type_.rank;
    }

    /// Index of eps_a +/- eps_b (1-based a < b) etc. Convenience for tests and
    /// constructions: `eps_root({{1, 1}, {2, -1}})` is eps1 - eps2.
    int eps_root(std::initializer_list<std::pair<int, int>> terms) const
    {
        std::vector<Rational> e(static_cast<std::size_t>(eps_dimension()));
        for (auto [pos, coeff] : terms) e.at(static_cast<std::size_t>(pos - 1)) += coeff;
        auto idx = find_eps(e);
        if (!idx) throw Error("not a positive root of " + type_.str());
        return *idx;
    }

    /// Root permutations induced by Dynkin diagram automorphisms (identity first).
    const std::vector<std::vector<int>>& diagram_automorphisms() const { return automorphisms_; }

    std::string coords_str(int i) const
    {
        std::string s = "(";
        const auto& c = root(i).coords;
        for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + c[k].str();
        return s + ")";
    }

    std::string eps_str(int i) const
    {
        const auto& e = root(i).eps;
        if (!e) return coords_str(i);
        std::string s;
        for (std::size_t k = 0; k < e->size(); ++k) {
            const Rational& c = (*e)[k];
            if (c == 0) continue;
            if (c > 0 && !s.empty()) s += "+";
            if (c < 0) s += "-";
            if (abs(c) != 1) s += to_string(Rational(abs(c)));
            s += "e" + std::to_string(k + 1);
        }
        return s;
    }

private:
    static constexpr int no_root = std::numeric_limits<int>::min();

    struct CoordLess {
        bool operator()(const std::vector<AlgebraicScalar>& a, const std::vector<AlgebraicScalar>& b) const
        {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (repr_less(a[i], b[i])) return true;
                if (repr_less(b[i], a[i])) return false;
            }
            return false;
        }
    };

    std::size_t flat(int i, int j) const
    {
        return static_cast<std::size_t>(i) * roots_.size() + static_cast<std::size_t>(j);
    }

    AlgebraicScalar q(const Rational& v) const { return {field_, v}; }

    void setup_simple_data()
    {
        const int n = type_.rank;
        const char f = type_.family;
        int field_m = 1;
        if (f == 'H') field_m = 5;
        if (f == 'I') field_m = type_.dihedral_m;
        field_ = NumberField::real_cyclotomic(field_m);
        gram_.assign(static_cast<std::size_t>(n), std::vector<AlgebraicScalar>(static_cast<std::size_t>(n), q(0)));

        if (type_.is_classical()) {
            const int dim = f == 'A' ? n + 1 : n;
            simple_eps_.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(dim)));
            for (int i = 0; i + 1 < n || (f == 'A' && i < n); ++i) {
                simple_eps_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
                simple_eps_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
            }
            auto& last = simple_eps_[static_cast<std::size_t>(n - 1)];
            if (f == 'B') last[static_cast<std::size_t>(n - 1)] = 1;
            if (f == 'C') last[static_cast<std::size_t>(n - 1)] = 2;
            if (f == 'D') {
                last[static_cast<std::size_t>(n - 2)] = 1;
                last[static_cast<std::size_t>(n - 1)] = 1;
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rational dot = 0;
                    for (int k = 0; k < dim; ++k)
                        dot += simple_eps_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                               simple_eps_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                    gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q(dot);
                }
        } else if (f == 'E') {
            // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
            std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            if (n >= 7) edges.emplace_back(6, 7);
            if (n >= 8) edges.emplace_back(7, 8);
            for (int i = 0; i < n; ++i) gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = q(2);
            for (auto [a, b] : edges) set_gram(a, b, q(-1));
        } else if (f == 'F') {
            // a1, a2 short; a3, a4 long; double bond between a2 and a3.
            const Rational len[4] = {1, 1, 2, 2};
            for (int i = 0; i < 4; ++i) gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = q(len[i]);
            set_gram(1, 2, q(Rational(-1, 2)));
            set_gram(2, 3, q(-1));
            set_gram(3, 4, q(-1));
        } else if (f == 'G') {
            // a1 short, a2 long.
            gram_[0][0] = q(1);
            gram_[1][1] = q(3);
            set_gram(1, 2, q(Rational(-3, 2)));
        } else {
            // Canonical representation: unit simple roots, (a_s, a_t) = -cos(pi/m_st).
            std::vector<std::pair<std::pair<int, int>, int>> bonds;
            if (f == 'H') {
                bonds = {{{1, 2}, 5}, {{2, 3}, 3}};
                if (n == 4) bonds.push_back({{3, 4}, 3});
            } else {
                bonds = {{{1, 2}, type_.dihedral_m}};
            }
            for (int i = 0; i < n; ++i) gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = q(1);
            for (auto [edge, m] : bonds) set_gram(edge.first, edge.second, neg_half_cos(m));
        }
    }

    // -cos(pi/m) as an element of the current field.
    AlgebraicScalar neg_half_cos(int m) const
    {
        if (m == 2) return q(0);
        if (m == 3) return q(Rational(-1, 2));
        if (m != field_->tag()) throw Error("bond order not representable in field");
        return AlgebraicScalar::generator(field_) * Rational(-1, 2);
    }

    void set_gram(int a, int b, const AlgebraicScalar& v)
    {
        gram_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = v;
        gram_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = v;
    }

    std::vector<AlgebraicScalar> reflect_coords(int k, const std::vector<AlgebraicScalar>& v) const
    {
        AlgebraicScalar pairing(field_);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) pairing += v[j] * gram_[j][static_cast<std::size_t>(k)];
        if (pairing.is_zero()) return v;
        const AlgebraicScalar c = pairing * two_over_norm_[static_cast<std::size_t>(k)];
        std::vector<AlgebraicScalar> out = v;
        out[static_cast<std::size_t>(k)] -= c;
        return out;
    }

    void enumerate_roots()
    {
        const int n = rank();
        two_over_norm_.clear();
        for (int k = 0; k < n; ++k)
            two_over_norm_.push_back(q(2) * gram_[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].inverse());

        // Close the simple roots under the simple reflections (the W-orbit of Pi).
        std::map<std::vector<AlgebraicScalar>, int, CoordLess> seen;
        std::vector<std::vector<AlgebraicScalar>> all;
        std::deque<int> queue;
        for (int k = 0; k < n; ++k) {
            std::vector<AlgebraicScalar> e(static_cast<std::size_t>(n), q(0));
            e[static_cast<std::size_t>(k)] = q(1);
            seen.emplace(e, static_cast<int>(all.size()));
            queue.push_back(static_cast<int>(all.size()));
            all.push_back(std::move(e));
        }
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            for (int k = 0; k < n; ++k) {
                auto img = reflect_coords(k, all[static_cast<std::size_t>(cur)]);
                if (seen.count(img)) continue;
                if (all.size() > 100000) throw Error("root closure did not terminate");
                seen.emplace(img, static_cast<int>(all.size()));
                queue.push_back(static_cast<int>(all.size()));
                all.push_back(std::move(img));
            }
        }

        std::vector<std::vector<AlgebraicScalar>> pos;
        for (auto& v : all) {
            bool nonneg = true, nonpos = true;
            for (const auto& c : v) {
                const int s = c.sign();
                if (s < 0) nonneg = false;
                if (s > 0) nonpos = false;
            }
            if (nonneg == nonpos) throw Error("root with mixed-sign coefficients in " + type_.str());
            if (nonneg) pos.push_back(v);
        }
        if (pos.size() * 2 != all.size()) throw Error("positive roots are not half of the roots");

        // Deterministic order: height, then coordinates lexicographically (real order).
        std::vector<std::pair<AlgebraicScalar, std::size_t>> keyed;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            AlgebraicScalar h(field_);
            for (const auto& c : pos[i]) h += c;
            keyed.emplace_back(h, i);
        }
        std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
            const int c = compare(a.first, b.first);
            if (c != 0) return c < 0;
            const auto& x = pos[a.second];
            const auto& y = pos[b.second];
            for (std::size_t k = 0; k < x.size(); ++k) {
                const int d = compare(x[k], y[k]);
                if (d != 0) return d < 0;
            }
            return false;
        });

        roots_.clear();
        for (auto& [h, i] : keyed) {
            Root r;
            r.coords = pos[i];
            if (type_.is_classical()) {
                std::vector<Rational> e(simple_eps_[0].size());
                for (std::size_t k = 0; k < r.coords.size(); ++k)
                    for (std::size_t d = 0; d < e.size(); ++d)
                        e[d] += r.coords[k].rational_part() * simple_eps_[k][d];
                r.eps = std::move(e);
            }
            roots_.push_back(std::move(r));
        }
        index_.clear();
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            index_.emplace(roots_[i].coords, static_cast<int>(i));
            if (roots_[i].eps) eps_index_.emplace(*roots_[i].eps, static_cast<int>(i));
        }
    }

    void build_tables()
    {
        const int n = rank();
        const int np = num_positive();
        simple_.clear();
        simple_pos_.assign(static_cast<std::size_t>(np), -1);
        for (int k = 0; k < n; ++k) {
            std::vector<AlgebraicScalar> e(static_cast<std::size_t>(n), q(0));
            e[static_cast<std::size_t>(k)] = q(1);
            const int idx = *find(e);
            simple_.push_back(idx);
            simple_pos_[static_cast<std::size_t>(idx)] = k;
        }

        refl_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(np)));
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < np; ++i) {
                auto img = find_signed(reflect_coords(k, roots_[static_cast<std::size_t>(i)].coords));
                if (!img) throw Error("reflection table is not closed");
                refl_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = *img;
            }

        sum_.assign(static_cast<std::size_t>(np) * static_cast<std::size_t>(np), -1);
        diff_.assign(static_cast<std::size_t>(np) * static_cast<std::size_t>(np), no_root);
        std::vector<AlgebraicScalar> tmp(static_cast<std::size_t>(n), q(0));
        for (int i = 0; i < np; ++i)
            for (int j = i + 1; j < np; ++j) {
                for (int k = 0; k < n; ++k)
                    tmp[static_cast<std::size_t>(k)] = roots_[static_cast<std::size_t>(i)].coords[static_cast<std::size_t>(k)] +
                                                       roots_[static_cast<std::size_t>(j)].coords[static_cast<std::size_t>(k)];
                auto s = find(tmp);
                if (!s) continue;
                sum_[flat(i, j)] = sum_[flat(j, i)] = *s;
                // s - i = j and s - j = i; i - s = -j, j - s = -i.
                diff_[flat(*s, i)] = j;
                diff_[flat(*s, j)] = i;
                diff_[flat(i, *s)] = signed_root::negate(j);
                diff_[flat(j, *s)] = signed_root::negate(i);
            }

        build_cone_triples();

        if (type_.is_crystallographic()) {
            const int top = np - 1;
            if (np >= 2 && compare(height(top), height(top - 1)) == 0) throw Error("highest root is not unique");
            highest_ = top;
        }

        coxeter_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
        for (int a = 0; a < n; ++a) {
            coxeter_[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                auto apply = [&](int k, int x) {
                    const int r = refl_[static_cast<std::size_t>(k)][static_cast<std::size_t>(signed_root::index(x))];
                    return signed_root::is_positive(x) ? r : signed_root::negate(r);
                };
                // smallest order with (s_a s_b)^order fixing every positive root
                int order = 1;
                for (; order <= 1000; ++order) {
                    bool identity = true;
                    for (int i = 0; i < np && identity; ++i) {
                        int x = i;
                        for (int t = 0; t < order; ++t) x = apply(a, apply(b, x));
                        identity = x == i;
                    }
                    if (identity) break;
                }
                coxeter_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = order;
            }
        }

        compute_automorphisms();
    }

    // Candidates from a floating-point solve, each confirmed exactly by Cramer's rule.
    void build_cone_triples()
    {
        cone_.clear();
        const int np = num_positive(), n = rank();
        std::vector<std::vector<double>> d(static_cast<std::size_t>(np), std::vector<double>(static_cast<std::size_t>(n)));
        for (int i = 0; i < np; ++i)
            for (int k = 0; k < n; ++k)
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = roots_[static_cast<std::size_t>(i)].coords[static_cast<std::size_t>(k)].to_double();
        auto dot = [&](int x, int y) {
            double acc = 0;
            for (int k = 0; k < n; ++k) acc += d[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(y)][static_cast<std::size_t>(k)];
            return acc;
        };
        constexpr double tol = 1e-9;
        for (int a = 0; a < np; ++a)
            for (int b = a + 1; b < np; ++b) {
                const double aa = dot(a, a), bb = dot(b, b), ab = dot(a, b);
                const double det = aa * bb - ab * ab;
                for (int g = 0; g < np; ++g) {
                    if (g == a || g == b) continue;
                    const double ga = dot(g, a), gb = dot(g, b);
                    const double s = (ga * bb - gb * ab) / det, t = (aa * gb - ab * ga) / det;
                    if (s < tol || t < tol) continue;
                    double res = 0;
                    for (int k = 0; k < n; ++k) {
                        const double r = d[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)] -
                                         s * d[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] -
                                         t * d[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
                        res += r * r;
                    }
                    if (res > 1e-12) continue;
                    if (!in_open_cone(a, b, g)) throw Error("cone membership disagrees with exact arithmetic");
                    cone_.push_back({a, b, g});
                }
            }
    }

    bool in_open_cone(int a, int b, int g) const
    {
        const AlgebraicScalar aa = inner_product(a, a), bb = inner_product(b, b), ab = inner_product(a, b);
        const AlgebraicScalar ga = inner_product(g, a), gb = inner_product(g, b);
        const AlgebraicScalar det = aa * bb - ab * ab, ds = ga * bb - gb * ab, dt = aa * gb - ab * ga;
        const int sd = det.sign();
        if (ds.sign() != sd || dt.sign() != sd) return false;
        const auto& va = root(a).coords;
        const auto& vb = root(b).coords;
        const auto& vg = root(g).coords;
        for (std::size_t k = 0; k < vg.size(); ++k)
            if (!(det * vg[k] == ds * va[k] + dt * vb[k])) return false;
        return true;
    }

    void compute_automorphisms()
    {
        const int n = rank();
        automorphisms_.clear();
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    ok = gram_[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]
                              [static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])] ==
                         gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!ok) continue;
            std::vector<int> perm(roots_.size());
            for (std::size_t r = 0; r < roots_.size(); ++r) {
                std::vector<AlgebraicScalar> img(static_cast<std::size_t>(n), q(0));
                for (int k = 0; k < n; ++k)
                    img[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] = roots_[r].coords[static_cast<std::size_t>(k)];
                perm[r] = *find(img);
            }
            automorphisms_.push_back(std::move(perm));
        } while (n <= 8 && std::next_permutation(sigma.begin(), sigma.end()));
    }

    TypeId type_;
    FieldPtr field_;
    std::vector<std::vector<AlgebraicScalar>> gram_;
    std::vector<AlgebraicScalar> two_over_norm_;
    std::vector<std::vector<Rational>> simple_eps_;
    std::vector<Root> roots_;
    std::map<std::vector<AlgebraicScalar>, int, CoordLess> index_;
    std::map<std::vector<Rational>, int> eps_index_;
    std::vector<int> simple_;
    std::vector<int> simple_pos_;
    std::vector<std::vector<int>> refl_;
    std::vector<int> sum_;
    std::vector<int> diff_;
    std::vector<std::array<int, 3>> cone_;
    std::optional<int> highest_;
    CoxeterMatrix coxeter_;
    std::vector<std::vector<int>> automorphisms_;
};

inline RootSystem build_root_system(TypeId t) { return RootSystem(t); }
inline RootSystem build_root_system(const std::string& t) { return RootSystem(TypeId::parse(t)); }

/// Index bijection a -> a^v = 2a/(a,a) between the positive roots of a B_n
/// system and its C_n partner (either direction).
class CorootMap {
public:
    CorootMap(const RootSystem& from, const RootSystem& to) : universe_(to.num_positive())
    {
        const char f = from.type().family, g = to.type().family;
        if (!((f == 'B' && g == 'C') || (f == 'C' && g == 'B')) || from.type().rank != to.type().rank)
            throw Error("coroot map needs a B_n/C_n pair, got " + from.type().str() + " and " + to.type().str());
        for (int i = 0; i < from.num_positive(); ++i) {
            const auto& e = *from.root(i).eps;
            Rational norm = 0;
            for (const auto& c : e) norm += c * c;
            std::vector<Rational> img;
            for (const auto& c : e) img.push_back(Rational(2) * c / norm);
            auto j = to.find_eps(img);
            if (!j) throw Error("coroot is not a root of the partner system");
            map_.push_back(*j);
        }
    }

    int operator()(int i) const { return map_.at(static_cast<std::size_t>(i)); }

    RootSet image(const RootSet& s) const
    {
        RootSet out(universe_);
        s.for_each([&](int i) { out.insert(map_[static_cast<std::size_t>(i)]); });
        return out;
    }

private:
    int universe_;
    std::vector<int> map_;
};

inline TypeId dual_type(const TypeId& t)
{
    if (t.family != 'B' && t.family != 'C') throw Error("type " + t.str() + " has no B/C partner");
    return {t.family == 'B' ? 'C' : 'B', t.rank, 0};
}

/// Image of S under a -> a^v; builds the partner system.
inline RootSet coroot_image(const RootSystem& rs, const RootSet& s)
{
    const RootSystem partner(dual_type(rs.type()));
    return CorootMap(rs, partner).image(s);
}

}  // namespace mcinv

#endif  // MCINV_ROOT_SYSTEM_HPP
