#include "knets/linalg.hpp"

namespace knets {

// Bareiss one-step fraction-free elimination: every intermediate entry is a
// minor of the input, so coefficients stay polynomial in the inputs instead
// of accumulating nested quotients.
int exact_rank(ScalarMatrix m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    Scalar prev_pivot(m[0][0].field(), 1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev_pivot;
            }
            m[i][c] = Scalar(m[i][c].field(), 0);
        }
        prev_pivot = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

Scalar det3(const Scalar& a00, const Scalar& a01, const Scalar& a02,
            const Scalar& a10, const Scalar& a11, const Scalar& a12,
            const Scalar& a20, const Scalar& a21, const Scalar& a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
           a02 * (a10 * a21 - a11 * a20);
}

} // namespace knets
