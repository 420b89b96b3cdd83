#ifndef MCINV_ROOT_SET_HPP
#define MCINV_ROOT_SET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "mcinv/error.hpp"

namespace mcinv {

/// Subset of the positive roots of one root system, as a fixed 128-bit vector
/// (E8 has 120 positive roots). `universe()` is |positive roots|.
class RootSet {
public:
    static constexpr int capacity = 128;

    RootSet() = default;

    explicit RootSet(int universe) : universe_(static_cast<std::uint16_t>(universe))
    {
        if (universe < 0 || universe > capacity) throw Error("root set universe out of range");
    }

    RootSet(int universe, std::initializer_list<int> members) : RootSet(universe)
    {
        for (int i : members) insert(i);
    }

    static RootSet full(int universe)
    {
        RootSet s(universe);
        for (int i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    static RootSet from_indices(int universe, const std::vector<int>& members)
    {
        RootSet s(universe);
        for (int i : members) s.insert(i);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int i) const { return (w_[word(i)] >> bit(i)) & 1U; }
    void insert(int i)
    {
        check(i);
        w_[word(i)] |= std::uint64_t{1} << bit(i);
    }
    void erase(int i)
    {
        check(i);
        w_[word(i)] &= ~(std::uint64_t{1} << bit(i));
    }

    int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    bool empty() const { return (w_[0] | w_[1]) == 0; }
    bool is_full() const { return size() == universe_; }

    bool intersects(const RootSet& o) const { return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0; }
    bool subset_of(const RootSet& o) const { return ((w_[0] & ~o.w_[0]) | (w_[1] & ~o.w_[1])) == 0; }

    RootSet& operator|=(const RootSet& o)
    {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }
    RootSet& operator&=(const RootSet& o)
    {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }
    RootSet& operator-=(const RootSet& o)
    {
        w_[0] &= ~o.w_[0];
        w_[1] &= ~o.w_[1];
        return *this;
    }

    friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
    friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
    friend RootSet operator-(RootSet a, const RootSet& b) { return a -= b; }

    RootSet complement() const { return full(universe_) - *this; }

    friend bool operator==(const RootSet& a, const RootSet& b) = default;

    /// Lexicographic order on sorted index sequences.
    friend bool lex_less(const RootSet& a, const RootSet& b)
    {
        RootSet diff = a;
        diff.w_[0] ^= b.w_[0];
        diff.w_[1] ^= b.w_[1];
        const int first = diff.first();
        if (first < 0) return false;
        return a.contains(first);
    }

    /// Lowest member, or -1.
    int first() const
    {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    /// Lowest member strictly greater than i, or -1.
    int next(int i) const
    {
        ++i;
        if (i >= capacity) return -1;
        if (i < 64) {
            const std::uint64_t m = w_[0] & (~std::uint64_t{0} << i);
            if (m) return std::countr_zero(m);
            i = 64;
        }
        const std::uint64_t m = w_[1] & (~std::uint64_t{0} << (i - 64));
        return m ? 64 + std::countr_zero(m) : -1;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (int k = 0; k < 2; ++k) {
            std::uint64_t m = w_[k];
            while (m) {
                f(64 * k + std::countr_zero(m));
                m &= m - 1;
            }
        }
    }

    std::vector<int> indices() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::string str() const
    {
        std::string s = "{";
        bool first_item = true;
        for_each([&](int i) {
            if (!first_item) s += ",";
            first_item = false;
            s += std::to_string(i);
        });
        return s + "}";
    }

    std::size_t hash() const
    {
        return std::hash<std::uint64_t>{}(w_[0] * 0x9E3779B97F4A7C15ULL ^ (w_[1] + 0x632BE59BD9B4E019ULL));
    }

    const std::array<std::uint64_t, 2>& words() const { return w_; }

private:
    static int word(int i) { return i >> 6; }
    static int bit(int i) { return i & 63; }
    void check(int i) const
    {
        if (i < 0 || i >= universe_) throw Error("root index " + std::to_string(i) + " out of range");
    }

    std::array<std::uint64_t, 2> w_{};
    std::uint16_t universe_ = 0;
};

struct RootSetHash {
    std::size_t operator()(const RootSet& s) const { return s.hash(); }
};

}  // namespace mcinv

#endif  // MCINV_ROOT_SET_HPP
