#pragma once
// Generated by tools/derive_fan_table. Do not edit by hand.

#include <array>

namespace intcol::detail {

struct FanBaseRow {
  int n, t, a, b, color;
};

inline constexpr std::array<FanBaseRow, 90> kFanBaseRows{{
    {3, 3, 0, 1, 1},
    {3, 3, 0, 2, 2},
    {3, 3, 1, 2, 3},
    {3, 3, 1, 3, 2},
    {3, 3, 2, 3, 1},
    {4, 5, 0, 1, 2},
    {4, 5, 0, 2, 1},
    {4, 5, 0, 3, 3},
    {4, 5, 1, 2, 4},
    {4, 5, 1, 4, 3},
    {4, 5, 2, 3, 5},
    {4, 5, 2, 4, 2},
    {4, 5, 2, 5, 3},
    {4, 5, 3, 5, 4},
    {5, 5, 0, 1, 1},
    {5, 5, 0, 2, 4},
    {5, 5, 0, 3, 2},
    {5, 5, 0, 4, 3},
    {5, 5, 1, 2, 3},
    {5, 5, 1, 5, 2},
    {5, 5, 2, 3, 5},
    {5, 5, 2, 5, 1},
    {5, 5, 2, 6, 2},
    {5, 5, 3, 4, 4},
    {5, 5, 3, 6, 1},
    {5, 5, 3, 7, 3},
    {5, 5, 4, 7, 2},
    {6, 5, 0, 1, 1},
    {6, 5, 0, 2, 3},
    {6, 5, 0, 3, 4},
    {6, 5, 0, 4, 2},
    {6, 5, 0, 5, 5},
    {6, 5, 1, 2, 2},
    {6, 5, 1, 6, 3},
    {6, 5, 2, 3, 5},
    {6, 5, 2, 6, 4},
    {6, 5, 2, 7, 1},
    {6, 5, 3, 4, 1},
    {6, 5, 3, 7, 2},
    {6, 5, 3, 8, 3},
    {6, 5, 4, 5, 3},
    {6, 5, 4, 8, 4},
    {6, 5, 4, 9, 5},
    {6, 5, 5, 9, 4},
    {7, 6, 0, 1, 1},
    {7, 6, 0, 2, 2},
    {7, 6, 0, 3, 3},
    {7, 6, 0, 4, 4},
    {7, 6, 0, 5, 6},
    {7, 6, 0, 6, 5},
    {7, 6, 1, 2, 3},
    {7, 6, 1, 7, 2},
    {7, 6, 2, 3, 4},
    {7, 6, 2, 7, 1},
    {7, 6, 2, 8, 5},
    {7, 6, 3, 4, 5},
    {7, 6, 3, 8, 6},
    {7, 6, 3, 9, 2},
    {7, 6, 4, 5, 2},
    {7, 6, 4, 9, 1},
    {7, 6, 4, 10, 3},
    {7, 6, 5, 6, 3},
    {7, 6, 5, 10, 4},
    {7, 6, 5, 11, 5},
    {7, 6, 6, 11, 4},
    {8, 7, 0, 1, 1},
    {8, 7, 0, 2, 2},
    {8, 7, 0, 3, 3},
    {8, 7, 0, 4, 4},
    {8, 7, 0, 5, 5},
    {8, 7, 0, 6, 7},
    {8, 7, 0, 7, 6},
    {8, 7, 1, 2, 3},
    {8, 7, 1, 8, 2},
    {8, 7, 2, 3, 4},
    {8, 7, 2, 8, 1},
    {8, 7, 2, 9, 5},
    {8, 7, 3, 4, 2},
    {8, 7, 3, 9, 6},
    {8, 7, 3, 10, 5},
    {8, 7, 4, 5, 3},
    {8, 7, 4, 10, 6},
    {8, 7, 4, 11, 5},
    {8, 7, 5, 6, 4},
    {8, 7, 5, 11, 6},
    {8, 7, 5, 12, 7},
    {8, 7, 6, 7, 5},
    {8, 7, 6, 12, 6},
    {8, 7, 6, 13, 3},
    {8, 7, 7, 13, 4},
}};

}  // namespace intcol::detail
