#ifndef MCINV_DETAIL_WORD_LISTS_HPP
#define MCINV_DETAIL_WORD_LISTS_HPP

#include <array>
#include <string_view>

namespace mcinv::detail {

// Word lists in the word-list text format (one word per line, 1-based
// generators, left-to-right products). Do not edit: guarded by a checksum test.

inline constexpr std::string_view words_E6 = R"(
2 4 3 5 4 2 6 5 4 3 1
4 3 5 4 2 6 5 4 3 1
3 5 4 2 6 5 4 3 1
5 4 2 6 5 4 3 1
3 4 2 6 5 4 3 1
4 2 6 5 4 3 1
2 6 5 4 3 1
3 4 2 5 4 3 1
4 2 5 4 3 1
2 5 4 3 1
2 4 3 1
6 5 4 3 1
5 4 3 1
4 3 1
3 1
1
)";

inline constexpr std::string_view words_E7 = R"(
1 3 4 2 5 4 3 1 6 5 4 2 3 4 5 6 7
3 4 2 5 4 3 1 6 5 4 2 3 4 5 6 7
4 2 5 4 3 1 6 5 4 2 3 4 5 6 7
2 5 4 3 1 6 5 4 2 3 4 5 6 7
2 4 3 1 6 5 4 2 3 4 5 6 7
5 4 3 1 6 5 4 2 3 4 5 6 7
4 3 1 6 5 4 2 3 4 5 6 7
3 1 6 5 4 2 3 4 5 6 7
1 6 5 4 2 3 4 5 6 7
2 4 3 1 5 4 2 3 4 5 6 7
4 3 1 5 4 2 3 4 5 6 7
3 1 5 4 2 3 4 5 6 7
1 5 4 2 3 4 5 6 7
3 1 4 2 3 4 5 6 7
1 4 2 3 4 5 6 7
1 2 3 4 5 6 7
1 3 4 5 6 7
6 5 4 2 3 4 5 6 7
5 4 2 3 4 5 6 7
4 2 3 4 5 6 7
2 3 4 5 6 7
3 4 5 6 7
2 4 5 6 7
4 5 6 7
5 6 7
6 7
7
)";

inline constexpr std::string_view words_E8 = R"(
8 7 6 5 4 2 3 1 4 3 5 4 2 6 5 4 3 7 6 5 4 2 8 7 6 5 4 3 1
7 6 5 4 2 3 1 4 3 5 4 2 6 5 4 3 7 6 5 4 2 8 7 6 5 4 3 1
6 5 4 2 3 1 4 3 5 4 2 6 5 4 3 7 6 5 4 2 8 7 6 5 4 3 1
5 4 2 3 1 4 3 5 4 2 6 5 4 3 7 6 5 4 2 8 7 6 5 4 3 1
4 2 3 1 4 3 5 4 2 6 5 4 3 7 6 5 4 2 8 7 6 5 4 3 1
2 3 1 4 3 5 4 2 6 5 4 3 7 6 5 4 2 8 7 6 5 4 3 1
1 2 4 3 5 4 2 6 5 4 3 7 6 5 4 2 8 7 6 5 4 3 1
3 1 4 3 5 4 2 6 5 4 3 1 7 6 5 4 2 3 8 7 6 5 4
1 4 3 5 4 2 6 5 4 3 1 7 6 5 4 2 3 8 7 6 5 4
1 3 5 4 2 6 5 4 3 1 7 6 5 4 2 3 8 7 6 5 4
1 3 4 2 6 5 4 3 1 7 6 5 4 3 8 7 6 5 4 2
1 3 4 2 5 4 3 1 7 6 5 4 2 3 8 7 6 5 4
1 3 4 2 5 4 3 1 6 5 4 2 3 4 8 7 6 5
2 4 3 5 4 2 6 5 4 3 7 6 5 4 2 8 7 6 5 4 3 1
4 3 5 4 2 6 5 4 3 1 7 6 5 4 2 8 7 6 5 4 3
3 5 4 2 6 5 4 3 1 7 6 5 4 2 3 8 7 6 5 4
3 4 2 6 5 4 3 1 7 6 5 4 2 3 8 7 6 5 4
3 4 2 5 4 3 1 7 6 5 4 2 3 8 7 6 5 4
3 4 2 5 4 3 1 6 5 4 2 3 8 7 6 5 4
5 4 2 6 5 4 3 1 7 6 5 4 2 3 8 7 6 5 4
4 2 6 5 4 3 1 7 6 5 4 3 8 7 6 5 4 2
4 2 5 4 3 1 7 6 5 4 2 3 8 7 6 5 4
4 2 5 4 3 1 6 5 4 2 3 4 8 7 6 5
2 6 5 4 3 1 7 6 5 4 3 8 7 6 5 4 2
2 5 4 3 1 7 6 5 4 3 8 7 6 5 4 2
2 5 4 3 1 6 5 4 2 3 8 7 6 5 4
2 4 3 1 7 6 5 4 2 3 8 7 6 5 4
2 4 3 1 6 5 4 2 3 4 8 7 6 5
2 4 3 1 5 4 2 3 4 8 7 6 5
1 3 4 2 5 4 3 1 6 5 4 2 3 7 6 5 4
3 4 2 5 4 3 1 6 5 4 2 3 7 6 5 4
4 2 5 4 3 1 6 5 4 2 3 7 6 5 4
2 5 4 3 1 6 5 4 3 7 6 5 4 2
2 4 3 1 6 5 4 2 3 7 6 5 4
2 4 3 1 5 4 2 3 4 7 6 5
2 4 3 1 5 4 2 3 6 5 4
)";

inline constexpr std::string_view words_H3 = R"(
1 2 1 3 2 1
2 1 2 1 3 2 1
2 1 3 2 1
1 3 2 1
3 2 1
)";

inline constexpr std::string_view words_H4 = R"(
1 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 3
2 1 2 1 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4
2 1 2 3 2 1 2 1 3 4 3
2 1 3 2 1 2 1 3 2 1 4 3
3 2 1 2 1 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4
2 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1
2 1 2 3 2 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1
3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2 3 4 3 2 1 2 1 3 2 1 2
)";

struct TableRow {
    std::array<int, 4> root;  // simple-root coefficients
    std::string_view word;
};

// F4 (a1, a2 short): each row pairs an essential root with its element.
inline constexpr std::array<TableRow, 6> f4_table{{
    {{2, 4, 3, 2}, "4 3 2 1 3 2 4 3"},
    {{2, 4, 3, 1}, "3 2 1 3 2 4 3"},
    {{2, 4, 2, 1}, "2 1 3 2 4 3"},
    {{2, 3, 2, 1}, "1 2 3 2 4 3 2 1"},
    {{1, 3, 2, 1}, "2 3 2 4 3 2 1"},
    {{1, 2, 2, 1}, "3 2 4 3 2 1"},
}};

}  // namespace mcinv::detail

#endif  // MCINV_DETAIL_WORD_LISTS_HPP
