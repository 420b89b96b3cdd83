#ifndef MCINV_ABELIAN_HPP
#define MCINV_ABELIAN_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcinv/error.hpp"
#include "mcinv/root_set.hpp"
#include "mcinv/root_system.hpp"
#include "mcinv/scalar.hpp"
#include "mcinv/search.hpp"

namespace mcinv {

/// gamma = s*alpha + t*beta with s, t > 0.
struct ConeMembershipCertificate {
    int alpha = -1;
    int beta = -1;
    int gamma = -1;
    AlgebraicScalar s;
    AlgebraicScalar t;
};

inline bool is_abelian(const RootSystem& rs, const RootSet& a)
{
    const auto idx = a.indices();
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x + 1; y < idx.size(); ++y)
            if (rs.root_sum(idx[x], idx[y])) return false;
    return true;
}

/// First root in the open cone spanned by alpha and beta, if any. Only positive
/// roots can lie there. Solved by Cramer's rule on the Gram system; the solution
/// is accepted only when det*gamma = ds*alpha + dt*beta holds exactly.
inline std::optional<ConeMembershipCertificate> cone_violation(const RootSystem& rs, int alpha, int beta)
{
    const AlgebraicScalar aa = rs.inner_product(alpha, alpha), bb = rs.inner_product(beta, beta),
                          ab = rs.inner_product(alpha, beta);
    const AlgebraicScalar det = aa * bb - ab * ab;
    const int det_sign = det.sign();
    if (det_sign == 0) throw Error("parallel roots");
    const auto& va = rs.root(alpha).coords;
    const auto& vb = rs.root(beta).coords;
    for (int g = 0; g < rs.num_positive(); ++g) {
        if (g == alpha || g == beta) continue;
        const AlgebraicScalar ga = rs.inner_product(g, alpha), gb = rs.inner_product(g, beta);
        const AlgebraicScalar ds = ga * bb - gb * ab;
        const AlgebraicScalar dt = aa * gb - ab * ga;
        if (ds.sign() * det_sign <= 0 || dt.sign() * det_sign <= 0) continue;
        const auto& vg = rs.root(g).coords;
        bool in_plane = true;
        for (std::size_t c = 0; c < vg.size() && in_plane; ++c)
            in_plane = det * vg[c] == ds * va[c] + dt * vb[c];
        if (!in_plane) continue;
        const AlgebraicScalar inv = det.inverse();
        return ConeMembershipCertificate{alpha, beta, g, ds * inv, dt * inv};
    }
    return std::nullopt;
}

struct StronglyAbelianVerdict {
    bool strongly_abelian = true;
    std::optional<ConeMembershipCertificate> certificate;
};

inline StronglyAbelianVerdict is_strongly_abelian(const RootSystem& rs, const RootSet& a)
{
    const auto idx = a.indices();
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x + 1; y < idx.size(); ++y)
            if (auto c = cone_violation(rs, idx[x], idx[y])) return {false, std::move(c)};
    return {};
}

/// Pair tables for repeated queries on one root system.
class AbelianAnalyzer {
public:
    explicit AbelianAnalyzer(const RootSystem& rs) : rs_(rs), n_(rs.num_positive())
    {
        strong_.assign(static_cast<std::size_t>(n_), RootSet(n_));
        sum_free_.assign(static_cast<std::size_t>(n_), RootSet(n_));
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b) {
                if (!rs.root_sum(a, b)) {
                    sum_free_[static_cast<std::size_t>(a)].insert(b);
                    sum_free_[static_cast<std::size_t>(b)].insert(a);
                }
                if (!cone_violation(rs, a, b)) {
                    strong_[static_cast<std::size_t>(a)].insert(b);
                    strong_[static_cast<std::size_t>(b)].insert(a);
                }
            }
    }

    const RootSystem& root_system() const { return rs_; }

    /// Roots forming a strongly abelian pair with a.
    const RootSet& compatible(int a) const { return strong_[static_cast<std::size_t>(a)]; }

    bool is_abelian(const RootSet& s) const { return pairwise(s, sum_free_); }
    bool is_strongly_abelian(const RootSet& s) const { return pairwise(s, strong_); }

private:
    bool pairwise(const RootSet& s, const std::vector<RootSet>& table) const
    {
        bool ok = true;
        s.for_each([&](int a) {
            RootSet rest = s;
            rest.erase(a);
            if (ok && !rest.subset_of(table[static_cast<std::size_t>(a)])) ok = false;
        });
        return ok;
    }

    const RootSystem& rs_;
    int n_;
    std::vector<RootSet> strong_;
    std::vector<RootSet> sum_free_;
};

struct AbelianMaxResult {
    int value = 0;
    RootSet witness;
    SearchStatus status = SearchStatus::exact;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0;
};

namespace detail {

/// Maximum clique by branch and bound with greedy colouring bounds
/// (vertices in root-index order).
class CliqueSearch {
public:
    CliqueSearch(const std::vector<RootSet>& adj, int n, std::uint64_t node_budget, double seconds)
        : adj_(adj), n_(n), node_budget_(node_budget),
          deadline_(Clock::now() + std::chrono::microseconds(static_cast<std::int64_t>(std::min(seconds, 1e9) * 1e6)))
    {
    }

    AbelianMaxResult run()
    {
        best_ = RootSet(n_);
        RootSet cur(n_);
        expand(cur, RootSet::full(n_));
        AbelianMaxResult r;
        r.value = best_.size();
        r.witness = best_;
        r.status = aborted_ ? SearchStatus::lower_bound : SearchStatus::exact;
        r.nodes = nodes_;
        return r;
    }

private:
    // Colour classes over p; returns vertices in colouring order with their colour numbers.
    void colour(const RootSet& p, std::vector<int>& order, std::vector<int>& colours) const
    {
        order.clear();
        colours.clear();
        RootSet uncoloured = p;
        int c = 0;
        while (!uncoloured.empty()) {
            ++c;
            RootSet q = uncoloured;
            while (!q.empty()) {
                const int v = q.first();
                q.erase(v);
                q &= adj_[static_cast<std::size_t>(v)].complement();
                uncoloured.erase(v);
                order.push_back(v);
                colours.push_back(c);
            }
        }
    }

    void expand(RootSet& cur, RootSet p)
    {
        if (aborted_) return;
        ++nodes_;
        if (nodes_ > node_budget_ || ((nodes_ & 1023) == 0 && Clock::now() > deadline_)) {
            aborted_ = true;
            return;
        }
        std::vector<int> order, colours;
        colour(p, order, colours);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (cur.size() + colours[i] <= best_.size()) return;
            const int v = order[i];
            cur.insert(v);
            const RootSet np = p & adj_[static_cast<std::size_t>(v)];
            if (np.empty()) {
                if (cur.size() > best_.size() || (cur.size() == best_.size() && lex_less(cur, best_))) best_ = cur;
            } else {
                expand(cur, np);
            }
            cur.erase(v);
            p.erase(v);
            if (aborted_) return;
        }
    }

    const std::vector<RootSet>& adj_;
    int n_;
    std::uint64_t node_budget_;
    Clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    RootSet best_;
};

}  // namespace detail

/// Largest strongly abelian subset of the positive roots (maximum clique of the
/// strongly-abelian-pair graph).
inline AbelianMaxResult max_strongly_abelian(const AbelianAnalyzer& an, const SearchConfig& cfg = {})
{
    const auto start = detail::Clock::now();
    const int n = an.root_system().num_positive();
    std::vector<RootSet> adj;
    for (int a = 0; a < n; ++a) adj.push_back(an.compatible(a));
    auto r = detail::CliqueSearch(adj, n, cfg.node_budget, cfg.time_budget).run();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(detail::Clock::now() - start).count();
    return r;
}

inline AbelianMaxResult max_strongly_abelian(const RootSystem& rs, const SearchConfig& cfg = {})
{
    return max_strongly_abelian(AbelianAnalyzer(rs), cfg);
}

struct AdeCheckResult {
    bool ok = true;
    std::size_t samples = 0;
    std::size_t abelian_samples = 0;  // how many sampled sets were abelian
    std::optional<RootSet> counterexample;
};

/// Random subsets (each root kept with a random density) must be abelian exactly
/// when strongly abelian. Half the samples are grown greedily as abelian sets so
/// the interesting side is exercised too.
inline AdeCheckResult ade_equivalence_check(const RootSystem& rs, std::size_t samples, std::uint64_t seed = 1)
{
    if (!rs.type().is_simply_laced()) throw Error("ADE check needs a simply laced type");
    const AbelianAnalyzer an(rs);
    std::mt19937_64 rng(seed);
    const int n = rs.num_positive();
    AdeCheckResult out;
    for (std::size_t i = 0; i < samples; ++i) {
        RootSet s(n);
        if (i % 2 == 0) {
            const double density = std::uniform_real_distribution<double>(0.02, 0.3)(rng);
            std::bernoulli_distribution keep(density);
            for (int r = 0; r < n; ++r)
                if (keep(rng)) s.insert(r);
        } else {
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) perm[static_cast<std::size_t>(r)] = r;
            std::shuffle(perm.begin(), perm.end(), rng);
            const int target = std::uniform_int_distribution<int>(1, n)(rng);
            for (int r : perm) {
                if (s.size() >= target) break;
                RootSet t = s;
                t.insert(r);
                if (an.is_abelian(t)) s = t;
            }
        }
        ++out.samples;
        const bool ab = an.is_abelian(s);
        if (ab) ++out.abelian_samples;
        if (ab != an.is_strongly_abelian(s)) {
            out.ok = false;
            out.counterexample = s;
            return out;
        }
    }
    return out;
}

}  // namespace mcinv

#endif  // MCINV_ABELIAN_HPP
