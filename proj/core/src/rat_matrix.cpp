#include "hermop/rat_matrix.hpp"

#include <cstddef>

#include "hermop/errors.hpp"

namespace hermop {

bool rat_is_square(const RatMatrix& a, int n) {
    if (static_cast<int>(a.size()) != n) return false;
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) return false;
    return true;
}

RatMatrix rat_identity(int n) {
    HERMOP_DOMAIN_CHECK(n >= 1, "matrix size must be positive");
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

RatMatrix rat_transpose(const RatMatrix& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        HERMOP_DOMAIN_CHECK(row.size() == cols, "ragged matrix");
    RatMatrix t(cols, std::vector<Rat>(rows, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = rows == 0 ? 0 : a[0].size();
    HERMOP_DOMAIN_CHECK(b.size() == inner, "matrix shape mismatch in product");
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    for (const auto& row : a)
        HERMOP_DOMAIN_CHECK(row.size() == inner, "ragged matrix");
    for (const auto& row : b)
        HERMOP_DOMAIN_CHECK(row.size() == cols, "ragged matrix");
    RatMatrix c(rows, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RatMatrix rat_inverse(RatMatrix a) {
    const int n = static_cast<int>(a.size());
    HERMOP_DOMAIN_CHECK(n >= 1 && rat_is_square(a, n), "inverse requires a square matrix");
    RatMatrix inv = rat_identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        HERMOP_DOMAIN_CHECK(pivot >= 0, "matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rat p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace hermop
