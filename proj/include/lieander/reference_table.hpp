#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace lieander {

/// Regression fixture: exact lieander counts for every shape with
/// k_plus + k_minus <= 7 over 2 <= n <= 50. Row r holds n = r + 2; columns
/// follow kReferenceShapes.
inline constexpr int kReferenceNMin = 2;
inline constexpr int kReferenceNMax = 50;
inline constexpr std::array<std::pair<int, int>, 11> kReferenceShapes{{
    {2, 1},
    {3, 1},
    {2, 2},
    {4, 1},
    {3, 2},
    {5, 1},
    {4, 2},
    {3, 3},
    {6, 1},
    {5, 2},
    {4, 3},
}};

const std::array<std::array<std::int64_t, 11>, 49>& reference_counts();

}  // namespace lieander
