#include "convord/linalg.hpp"

namespace convord {

RatVec solve_rational(std::vector<RatVec> A, RatVec b) {
    const size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == Rat(0)) ++piv;
        if (piv == n) throw std::runtime_error("solve_rational: singular system");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        Rat d = A[col][col];
        for (size_t j = col; j < n; ++j) A[col][j] /= d;
        b[col] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || A[i][col] == Rat(0)) continue;
            Rat f = A[i][col];
            for (size_t j = col; j < n; ++j) A[i][j] -= f * A[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

IntMat inverse(const IntMat& m) {
    const int n = m.n;
    std::vector<RatVec> A(n, RatVec(n));
    std::vector<RatVec> inv(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) A[i][j] = Rat(m(i, j));
        inv[i][i] = Rat(1);
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && A[piv][col] == Rat(0)) ++piv;
        if (piv == n) throw std::runtime_error("inverse: singular matrix");
        std::swap(A[piv], A[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = A[col][col];
        for (int j = 0; j < n; ++j) {
            A[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || A[i][col] == Rat(0)) continue;
            Rat f = A[i][col];
            for (int j = 0; j < n; ++j) {
                A[i][j] -= f * A[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    IntMat r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!is_integral(inv[i][j])) throw std::runtime_error("inverse: not integral");
            r(i, j) = inv[i][j].numerator();
        }
    return r;
}

}  // namespace convord
