/*
   Copyright 2026 The skewluroth authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <vector>

namespace skewluroth {
namespace detail {

/// Basis of the nullspace of the (rows x cols) matrix over an exact field F.
/// Plain fraction-based Gauss-Jordan; adequate at the small sizes the solvers
/// here produce.
template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> m, std::size_t cols) {
    std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        F inv = m[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            F f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] = m[r][j] - f * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(cols, F(0));
        v[free_col] = F(1);
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail
}  // namespace skewluroth
