#pragma once

// Dense exact rational matrices: just enough for basis changes.

#include "thetacob/rational.hpp"

#include <stdexcept>
#include <vector>

namespace thetacob {

using RatMatrix = std::vector<std::vector<Rat>>;

inline RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    RatMatrix r(rows, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

/// Gauss-Jordan inverse; throws std::domain_error when singular.
inline RatMatrix inverse(RatMatrix a) {
    std::size_t n = a.size();
    RatMatrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rat scale = Rat(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (a[col][j] != 0) a[i][j] -= f * a[col][j];
                if (inv[col][j] != 0) inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace thetacob
