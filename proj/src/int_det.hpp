#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace branch2::detail {

// Integer determinant by fraction-free (Bareiss) elimination.
inline std::int64_t int_det(std::vector<std::vector<std::int64_t>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    std::int64_t prev = 1;
    std::int64_t sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { swap_row = r; break; }
            if (swap_row == -1) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace branch2::detail
