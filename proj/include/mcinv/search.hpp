#ifndef MCINV_SEARCH_HPP
#define MCINV_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "mcinv/completeness.hpp"
#include "mcinv/constructions.hpp"
#include "mcinv/coxeter.hpp"
#include "mcinv/error.hpp"
#include "mcinv/root_set.hpp"
#include "mcinv/root_system.hpp"

namespace mcinv {

struct SearchConfig {
    int k_min = 1;
    int k_max = -1;  // -1: default cap
    std::uint64_t node_budget = 2'000'000'000ULL;
    double time_budget = 600.0;  // seconds
    unsigned threads = 1;
    bool use_conditions_pruning = true;
    std::size_t pool_cap = 100'000;
    std::size_t group_table_cap = 2'000'000;
    std::size_t path_budget = 1'000'000;
    bool seed_with_family = true;
};

enum class SearchStatus { exact, lower_bound, budget_exhausted };

inline const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::exact: return "exact";
    case SearchStatus::lower_bound: return "lower_bound";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

struct SearchStats {
    std::uint64_t nodes = 0;        // subset-enumeration nodes
    std::uint64_t cover_nodes = 0;  // witness-assignment nodes
    std::uint64_t candidates = 0;   // full-size sets handed to the cover phase
    double elapsed_ms = 0;
};

struct SearchResult {
    TypeId type_id;
    int value = 0;
    SearchStatus status = SearchStatus::budget_exhausted;
    Family witness;
    RootSet essential_set;
    SearchStats stats;
};

/// Default upper end of the scan: floor(n^2/4) for A_{n-1}, |positive roots| otherwise.
inline int default_k_max(const RootSystem& rs)
{
    if (rs.type().family == 'A') {
        const int n = rs.rank() + 1;
        return n * n / 4;
    }
    return rs.num_positive();
}

/// Lazily enumerates {w : N(w) n S = {beta}} breadth-first over the weak order,
/// never extending an element whose inversion set meets S - {beta}.
class WitnessPool {
public:
    WitnessPool(const RootSystem& rs, int beta, const RootSet& s) : rs_(&rs), beta_(beta), others_(s)
    {
        if (!s.contains(beta)) throw Error("beta is not in S");
        others_.erase(beta);
        GroupElement e = GroupElement::identity(rs);
        const RootSet inv(rs.num_positive());
        seen_.insert(inv);
        queue_.push_back({std::move(e), inv});
    }

    /// Next pool element, or nullopt when exhausted.
    std::optional<GroupElement> next()
    {
        while (!queue_.empty()) {
            auto [g, inv] = std::move(queue_.front());
            queue_.pop_front();
            for (int k = 0; k < rs_->rank(); ++k) {
                const int img = g.image(rs_->simple_index(k));
                if (!signed_root::is_positive(img) || others_.contains(img)) continue;
                RootSet child_inv = inv;
                child_inv.insert(img);
                if (!seen_.insert(child_inv).second) continue;
                queue_.push_back({g.times_generator(*rs_, k), child_inv});
            }
            if (inv.contains(beta_)) return std::move(g);
        }
        return std::nullopt;
    }

    /// Up to cap elements; `truncated` reports whether more remained.
    std::vector<GroupElement> take(std::size_t cap, bool& truncated)
    {
        std::vector<GroupElement> out;
        truncated = false;
        while (auto g = next()) {
            if (out.size() == cap) {
                truncated = true;
                break;
            }
            out.push_back(std::move(*g));
        }
        return out;
    }

private:
    struct Item {
        GroupElement g;
        RootSet inv;
    };
    const RootSystem* rs_;
    int beta_;
    RootSet others_;
    std::deque<Item> queue_;
    std::unordered_set<RootSet, RootSetHash> seen_;
};

inline WitnessPool witness_pool(const RootSystem& rs, int beta, const RootSet& s) { return WitnessPool(rs, beta, s); }

namespace detail {

using Clock = std::chrono::steady_clock;

/// Shared budget counters for one search.
struct Budget {
    std::uint64_t node_limit;
    Clock::time_point deadline;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> cover_nodes{0};
    std::atomic<bool> exhausted{false};

    Budget(std::uint64_t limit, double seconds)
        : node_limit(limit),
          deadline(Clock::now() + std::chrono::microseconds(static_cast<std::int64_t>(std::min(seconds, 1e9) * 1e6)))
    {
    }

    /// Counts one node; false once the node or time budget is spent.
    bool tick(std::atomic<std::uint64_t>& counter)
    {
        const auto n = counter.fetch_add(1, std::memory_order_relaxed) + 1;
        if (nodes.load(std::memory_order_relaxed) + cover_nodes.load(std::memory_order_relaxed) > node_limit)
            exhausted = true;
        else if ((n & 1023) == 0 && Clock::now() > deadline)
            exhausted = true;
        return !exhausted.load(std::memory_order_relaxed);
    }
};

/// Keeps the inclusion-maximal inversion sets (a larger N(w) is never a worse
/// choice: ownership is fixed by S and coverage only grows).
inline std::vector<std::size_t> maximal_positions(const std::vector<RootSet>& sets)
{
    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sets[a].size() > sets[b].size(); });
    std::vector<std::size_t> keep;
    for (std::size_t i : order) {
        bool dominated = false;
        for (std::size_t j : keep)
            if (sets[i].subset_of(sets[j])) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(i);
    }
    return keep;
}

/// Cover phase: choose one owner per beta in S so the union of owners' inversion
/// sets is everything. pools[b] lists the candidate inversion sets of beta_b.
class CoverSolver {
public:
    CoverSolver(int universe, std::vector<std::vector<RootSet>> pools, Budget& budget)
        : universe_(universe), pools_(std::move(pools)), budget_(budget)
    {
    }

    /// Chosen pool positions, one per beta, or nullopt. `aborted` is set if the budget ran out.
    std::optional<std::vector<std::size_t>> solve(bool& aborted)
    {
        aborted = false;
        const std::size_t k = pools_.size();
        choice_.assign(k, npos);
        for (const auto& p : pools_)
            if (p.empty()) return std::nullopt;
        RootSet reach(universe_);
        for (const auto& p : pools_)
            for (const auto& s : p) reach |= s;
        if (!reach.is_full()) return std::nullopt;
        const bool ok = dfs(RootSet(universe_), aborted);
        if (!ok) return std::nullopt;
        for (std::size_t b = 0; b < k; ++b)
            if (choice_[b] == npos) choice_[b] = 0;
        return choice_;
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    bool dfs(const RootSet& covered, bool& aborted)
    {
        if (!budget_.tick(budget_.cover_nodes)) {
            aborted = true;
            return false;
        }
        const RootSet uncovered = covered.complement();
        if (uncovered.empty()) return true;
        // reachability from the unassigned pools
        RootSet reach = covered;
        for (std::size_t b = 0; b < pools_.size(); ++b)
            if (choice_[b] == npos)
                for (const auto& s : pools_[b]) reach |= s;
        if (!reach.is_full()) return false;
        // most constrained uncovered root
        int best_root = -1;
        std::size_t best_count = npos;
        uncovered.for_each([&](int r) {
            if (best_count == 0) return;
            std::size_t c = 0;
            for (std::size_t b = 0; b < pools_.size(); ++b)
                if (choice_[b] == npos)
                    for (const auto& s : pools_[b])
                        if (s.contains(r)) ++c;
            if (c < best_count) {
                best_count = c;
                best_root = r;
            }
        });
        if (best_count == 0) return false;
        for (std::size_t b = 0; b < pools_.size(); ++b) {
            if (choice_[b] != npos) continue;
            for (std::size_t i = 0; i < pools_[b].size(); ++i) {
                if (!pools_[b][i].contains(best_root)) continue;
                choice_[b] = i;
                if (dfs(covered | pools_[b][i], aborted)) return true;
                choice_[b] = npos;
                if (aborted) return false;
            }
        }
        return false;
    }

    int universe_;
    std::vector<std::vector<RootSet>> pools_;
    Budget& budget_;
    std::vector<std::size_t> choice_;
};

/// Outcome of one feasibility attempt.
struct Feasibility {
    std::optional<Family> family;
    bool aborted = false;    // budget ran out
    bool truncated = false;  // some pool hit its cap
};

inline Family family_from_inversion_sets(const RootSystem& rs, const std::vector<RootSet>& sets, Provenance p)
{
    Family y(p);
    for (const auto& s : sets) {
        GroupElement g = element_from_biclosed(rs, s);
        Word w = reduced_word(rs, g);
        y.add(std::move(g), std::move(w));
    }
    return y;
}

/// Feasibility of S given per-beta pools (already restricted to N(w) n S = {beta}).
inline Feasibility solve_pools(const RootSystem& rs, std::vector<std::vector<RootSet>> raw, Budget& budget)
{
    Feasibility out;
    std::vector<std::vector<RootSet>> pools;
    pools.reserve(raw.size());
    for (auto& p : raw) {
        std::vector<RootSet> kept;
        for (std::size_t i : maximal_positions(p)) kept.push_back(p[i]);
        pools.push_back(std::move(kept));
    }
    CoverSolver solver(rs.num_positive(), pools, budget);
    auto choice = solver.solve(out.aborted);
    if (!choice) return out;
    std::vector<RootSet> sets;
    for (std::size_t b = 0; b < pools.size(); ++b) sets.push_back(pools[b][(*choice)[b]]);
    out.family = family_from_inversion_sets(rs, sets, Provenance::search);
    return out;
}

inline Feasibility feasible_with_bfs_pools(const RootSystem& rs, const RootSet& s, std::size_t cap, Budget& budget)
{
    std::vector<std::vector<RootSet>> pools;
    bool any_truncated = false;
    for (int beta : s.indices()) {
        bool truncated = false;
        auto elems = witness_pool(rs, beta, s).take(cap, truncated);
        any_truncated |= truncated;
        std::vector<RootSet> sets;
        sets.reserve(elems.size());
        for (const auto& g : elems) sets.push_back(inversion_set(g));
        pools.push_back(std::move(sets));
    }
    Feasibility out = solve_pools(rs, std::move(pools), budget);
    out.truncated = any_truncated && !out.family;
    return out;
}

}  // namespace detail

/// A family {w_beta : beta in S} with N(w_beta) n S = {beta} covering every
/// positive root, if one exists. Throws BudgetExceeded when undecided.
inline std::optional<Family> feasible_essential_set(const RootSystem& rs, const RootSet& s, const SearchConfig& cfg = {})
{
    if (s.empty()) return std::nullopt;
    detail::Budget budget(cfg.node_budget, cfg.time_budget);
    auto res = detail::feasible_with_bfs_pools(rs, s, cfg.pool_cap, budget);
    if (res.aborted) throw BudgetExceeded("feasibility check ran out of budget");
    if (res.truncated) throw BudgetExceeded("witness pool exceeded its cap");
    return res.family;
}

namespace detail {

/// The essential-set scan of search_mc. Candidate roots are taken in order of
/// descending height; sets are built as increasing sequences in that order and
/// grown only while every hereditary necessary condition still holds.
class EssentialSetScanner {
public:
    EssentialSetScanner(const RootSystem& rs, const SearchConfig& cfg, Budget& budget)
        : rs_(rs), cfg_(cfg), budget_(budget), n_(rs.num_positive())
    {
        for (int i = n_ - 1; i >= 0; --i) order_.push_back(i);
        pos_.assign(static_cast<std::size_t>(n_), 0);
        for (int p = 0; p < n_; ++p) pos_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = p;
        try {
            table_ = enumerate_inversion_sets(rs, cfg.group_table_cap);
        } catch (const BudgetExceeded&) {
            table_.clear();
        }
        automorphisms_ = rs.diagram_automorphisms();
    }

    bool has_table() const { return !table_.empty(); }

    struct LevelOutcome {
        std::optional<Family> family;
        RootSet s;
        bool complete = true;  // every candidate at this level decided
    };

    /// Searches size-k sets, in parallel over the first chosen root.
    LevelOutcome scan_level(int k, unsigned threads)
    {
        LevelOutcome out;
        out.s = RootSet(n_);
        if (k <= 0 || k > n_) return out;
        const int branches = n_ - k + 1;
        std::atomic<int> next_branch{0};
        std::atomic<int> best_branch{std::numeric_limits<int>::max()};
        std::mutex mu;
        std::vector<std::optional<std::pair<Family, RootSet>>> found(static_cast<std::size_t>(branches));
        std::atomic<bool> incomplete{false};

        auto worker = [&] {
            for (;;) {
                const int b = next_branch.fetch_add(1);
                if (b >= branches || b > best_branch.load()) return;
                Branch br(*this, k, b, best_branch);
                br.run();
                if (br.incomplete) incomplete = true;
                if (br.result) {
                    std::lock_guard<std::mutex> lock(mu);
                    found[static_cast<std::size_t>(b)] = std::move(br.result);
                    int cur = best_branch.load();
                    while (b < cur && !best_branch.compare_exchange_weak(cur, b)) {
                    }
                }
            }
        };
        const unsigned t = std::max(1U, threads);
        if (t == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        for (auto& f : found)
            if (f) {
                out.family = std::move(f->first);
                out.s = f->second;
                out.complete = true;
                return out;
            }
        out.complete = !incomplete.load();
        return out;
    }

private:
    struct Branch {
        EssentialSetScanner& sc;
        int k;
        int first;
        std::atomic<int>& best_branch;
        std::vector<int> chosen;  // positions in candidate order
        std::optional<std::pair<Family, RootSet>> result;
        bool incomplete = false;

        Branch(EssentialSetScanner& s, int k_, int first_, std::atomic<int>& best)
            : sc(s), k(k_), first(first_), best_branch(best)
        {
        }

        void run()
        {
            RootSet s(sc.n_);
            const int root = sc.order_[static_cast<std::size_t>(first)];
            s.insert(root);
            chosen.push_back(first);
            if (sc.admissible(s, root)) dfs(s);
        }

        bool stop() const { return best_branch.load(std::memory_order_relaxed) < first; }

        // true when a witness was found
        bool dfs(const RootSet& s)
        {
            if (!sc.budget_.tick(sc.budget_.nodes)) {
                incomplete = true;
                return false;
            }
            if (static_cast<int>(chosen.size()) == k) {
                if (!sc.canonical(s)) return false;
                sc.budget_.tick(sc.budget_.nodes);
                Feasibility f = sc.feasible(s);
                if (f.aborted || f.truncated) incomplete = true;
                if (f.family) {
                    result.emplace(std::move(*f.family), s);
                    return true;
                }
                return false;
            }
            const int need = k - static_cast<int>(chosen.size());
            for (int p = chosen.back() + 1; p <= sc.n_ - need; ++p) {
                if (stop() || sc.budget_.exhausted) {
                    incomplete = incomplete || sc.budget_.exhausted;
                    return false;
                }
                const int root = sc.order_[static_cast<std::size_t>(p)];
                RootSet t = s;
                t.insert(root);
                if (!sc.admissible(t, root)) continue;
                chosen.push_back(p);
                const bool hit = dfs(t);
                chosen.pop_back();
                if (hit) return true;
            }
            return false;
        }
    };

    /// Hereditary checks for s, where `added` is its newest member.
    bool admissible(const RootSet& s, int added) const
    {
        if (cfg_.use_conditions_pruning) {
            // cond2 on triples through `added`
            const auto idx = s.indices();
            for (int a : idx) {
                if (a == added) continue;
                auto x = rs_.root_sum(a, added);
                if (x && s.contains(*x)) return false;
                for (int b : idx)
                    if (b != added && b < a) {
                        auto y = rs_.root_sum(a, b);
                        if (y && *y == added) return false;
                    }
            }
            if (!string_free(rs_, s)) return false;
            try {
                if (!supports_pairwise_intersect(enumerate_root_paths(rs_, s, cfg_.path_budget))) return false;
            } catch (const BudgetExceeded&) {
                // undecided: not a violation
            }
        }
        if (has_table()) {
            // every member needs some w with N(w) n S = {beta}
            RootSet owned(n_);
            for (const auto& inv : table_) {
                const RootSet m = inv & s;
                if (m.size() == 1) owned |= m;
            }
            if (!(owned == s)) return false;
        }
        return true;
    }

    /// S is the least member of its orbit under the diagram automorphisms
    /// (sets compared as increasing position sequences in candidate order).
    bool canonical(const RootSet& s) const
    {
        std::vector<int> mine;
        s.for_each([&](int r) { mine.push_back(pos_[static_cast<std::size_t>(r)]); });
        std::sort(mine.begin(), mine.end());
        for (std::size_t a = 1; a < automorphisms_.size(); ++a) {
            std::vector<int> img;
            s.for_each([&](int r) {
                img.push_back(pos_[static_cast<std::size_t>(automorphisms_[a][static_cast<std::size_t>(r)])]);
            });
            std::sort(img.begin(), img.end());
            if (img < mine) return false;
        }
        return true;
    }

    Feasibility feasible(const RootSet& s)
    {
        if (!has_table()) return feasible_with_bfs_pools(rs_, s, cfg_.pool_cap, budget_);
        const auto betas = s.indices();
        std::vector<std::vector<RootSet>> pools(betas.size());
        for (const auto& inv : table_) {
            const RootSet m = inv & s;
            if (m.size() != 1) continue;
            const int b = m.first();
            const auto it = std::lower_bound(betas.begin(), betas.end(), b);
            pools[static_cast<std::size_t>(it - betas.begin())].push_back(inv);
        }
        return solve_pools(rs_, std::move(pools), budget_);
    }

    const RootSystem& rs_;
    const SearchConfig& cfg_;
    Budget& budget_;
    int n_;
    std::vector<int> order_;
    std::vector<int> pos_;
    std::vector<RootSet> table_;
    std::vector<std::vector<int>> automorphisms_;
};

/// Lowest-index essential root of each member.
inline RootSet lowest_essential_set(const RootSystem& rs, const Family& y)
{
    RootSet s(rs.num_positive());
    std::vector<bool> done(y.size(), false);
    for (const auto& [root, member] : essential_roots(rs, y))
        if (!done[member]) {
            done[member] = true;
            s.insert(root);
        }
    return s;
}

inline Family longest_element_family(const RootSystem& rs)
{
    Family y(Provenance::search);
    GroupElement w0 = element_from_biclosed(rs, RootSet::full(rs.num_positive()));
    Word w = reduced_word(rs, w0);
    y.add(std::move(w0), std::move(w));
    return y;
}

}  // namespace detail

/// MC(T) by the essential-set scan: for k from k_max downward, look for a size-k
/// set S admitting owners w_beta (N(w_beta) n S = {beta}) that cover everything.
/// Levels at or below the best known family size are skipped.
inline SearchResult search_mc(const RootSystem& rs, const SearchConfig& cfg = {})
{
    const auto start = detail::Clock::now();
    SearchResult res;
    res.type_id = rs.type();
    const int k_max = std::min(cfg.k_max < 0 ? default_k_max(rs) : cfg.k_max, rs.num_positive());
    if (cfg.k_min < 1 || cfg.k_min > std::max(k_max, 1)) throw Error("need 1 <= k_min <= k_max");

    // seed: the constructed family when it verifies, else {w0}
    Family best = detail::longest_element_family(rs);
    if (cfg.seed_with_family) {
        try {
            Family y = y_family(rs);
            if (is_minimal_inversion_complete(rs, y) && y.size() > best.size()) best = std::move(y);
        } catch (const Error&) {
        }
    }
    RootSet best_s = detail::lowest_essential_set(rs, best);
    int best_value = static_cast<int>(best.size());

    detail::Budget budget(cfg.node_budget, cfg.time_budget);
    detail::EssentialSetScanner scanner(rs, cfg, budget);
    bool all_decided = true;
    const int floor_k = std::max(cfg.k_min, best_value + 1);
    for (int k = k_max; k >= floor_k; --k) {
        auto lvl = scanner.scan_level(k, cfg.threads);
        if (lvl.family) {
            best = std::move(*lvl.family);
            best_s = lvl.s;
            best_value = k;
            break;
        }
        if (!lvl.complete) {
            all_decided = false;
            if (budget.exhausted) break;
        }
    }

    res.value = best_value;
    res.witness = std::move(best);
    res.essential_set = best_s;
    // exact needs every level above the value decided, with nothing skipped below k_min
    const bool covered_range = best_value + 1 >= cfg.k_min;
    if (all_decided && covered_range) res.status = SearchStatus::exact;
    else res.status = best_value >= cfg.k_min ? SearchStatus::lower_bound : SearchStatus::budget_exhausted;
    res.stats.nodes = budget.nodes.load();
    res.stats.cover_nodes = budget.cover_nodes.load();
    res.stats.elapsed_ms = std::chrono::duration<double, std::milli>(detail::Clock::now() - start).count();
    return res;
}

/// Independent oracle for tiny groups: largest complete family in which every
/// member keeps a root no other member covers. Families are grown by covering the
/// lowest uncovered root; no essential-set conditions are used.
inline SearchResult brute_force_mc(const RootSystem& rs)
{
    const auto start = detail::Clock::now();
    if (rs.num_positive() > 12) throw Error("brute force needs at most 12 positive roots");
    std::vector<RootSet> elems;
    try {
        elems = enumerate_inversion_sets(rs, 240);
    } catch (const BudgetExceeded&) {
        throw Error("brute force needs |W| <= 240");
    }
    const int n = rs.num_positive();
    std::vector<std::vector<std::size_t>> covering(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < elems.size(); ++e) elems[e].for_each([&](int r) { covering[static_cast<std::size_t>(r)].push_back(e); });

    std::uint64_t nodes = 0;
    std::vector<std::size_t> chosen, found;
    std::vector<int> count(static_cast<std::size_t>(n), 0);

    auto irredundant = [&] {
        for (std::size_t m : chosen) {
            bool own = false;
            elems[m].for_each([&](int r) { own = own || count[static_cast<std::size_t>(r)] == 1; });
            if (!own) return false;
        }
        return true;
    };

    // exists a complete irredundant family of size exactly k
    std::function<bool(int)> dfs = [&](int k) -> bool {
        ++nodes;
        int uncovered = 0, lowest = -1;
        for (int r = 0; r < n; ++r)
            if (count[static_cast<std::size_t>(r)] == 0) {
                ++uncovered;
                if (lowest < 0) lowest = r;
            }
        if (lowest < 0) {
            if (static_cast<int>(chosen.size()) != k) return false;
            found = chosen;
            return true;
        }
        if (static_cast<int>(chosen.size()) >= k || static_cast<int>(chosen.size()) + uncovered < k) return false;
        for (std::size_t e : covering[static_cast<std::size_t>(lowest)]) {
            if (std::find(chosen.begin(), chosen.end(), e) != chosen.end()) continue;
            elems[e].for_each([&](int r) { ++count[static_cast<std::size_t>(r)]; });
            chosen.push_back(e);
            if (irredundant() && dfs(k)) return true;
            chosen.pop_back();
            elems[e].for_each([&](int r) { --count[static_cast<std::size_t>(r)]; });
        }
        return false;
    };

    SearchResult res;
    res.type_id = rs.type();
    res.status = SearchStatus::exact;
    for (int k = n; k >= 1; --k) {
        if (dfs(k)) {
            std::vector<RootSet> sets;
            for (std::size_t e : found) sets.push_back(elems[e]);
            std::sort(sets.begin(), sets.end(), [](const RootSet& a, const RootSet& b) { return lex_less(a, b); });
            res.value = k;
            res.witness = detail::family_from_inversion_sets(rs, sets, Provenance::search);
            res.essential_set = detail::lowest_essential_set(rs, res.witness);
            break;
        }
    }
    res.stats.nodes = nodes;
    res.stats.elapsed_ms = std::chrono::duration<double, std::milli>(detail::Clock::now() - start).count();
    return res;
}

}  // namespace mcinv

#endif  // MCINV_SEARCH_HPP
