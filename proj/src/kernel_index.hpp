#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>

namespace qftforge::kernels::detail {

// Widens v by one bit: inserts a 0 at `pos`, shifting the upper bits left.
inline std::size_t insert_zero_bit(std::size_t v, int pos) {
    const std::size_t low_mask = (std::size_t{1} << pos) - 1;
    return ((v >> pos) << (pos + 1)) | (v & low_mask);
}

// Base index for a compacted loop counter: zeros inserted at two bit
// positions (any order).
inline std::size_t expand2(std::size_t v, int a, int b) {
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    return insert_zero_bit(insert_zero_bit(v, lo), hi);
}

inline std::size_t expand3(std::size_t v, int a, int b, int c) {
    std::array<int, 3> pos{a, b, c};
    std::sort(pos.begin(), pos.end());
    return insert_zero_bit(insert_zero_bit(insert_zero_bit(v, pos[0]), pos[1]), pos[2]);
}

}  // namespace qftforge::kernels::detail
