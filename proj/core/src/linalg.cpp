#include "latsieve/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace latsieve {

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int norm_sq(const IntVec& a) { return dot(a, a); }

Rat norm_sq(const RatVec& a) { return dot(a, a); }

bool is_zero(const IntVec& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

IntMat identity_matrix(size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat transpose(const IntMat& a) {
    check_rectangular(a);
    IntMat t(a[0].size(), IntVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    check_rectangular(a);
    check_rectangular(b);
    if (a[0].size() != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMat c(a.size(), IntVec(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IntVec mat_vec_mul_left(const IntVec& x, const IntMat& b) {
    check_rectangular(b);
    if (x.size() != b.size()) throw std::invalid_argument("mat_vec_mul_left: shape mismatch");
    IntVec y(b[0].size(), 0);
    for (size_t i = 0; i < b.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) y[j] += x[i] * b[i][j];
    }
    return y;
}

void check_rectangular(const IntMat& a) {
    if (a.empty() || a[0].empty()) throw std::invalid_argument("matrix must be non-empty");
    for (const auto& row : a)
        if (row.size() != a[0].size()) throw std::invalid_argument("matrix rows have unequal lengths");
}

Int determinant(IntMat a) {
    check_rectangular(a);
    size_t n = a.size();
    if (a[0].size() != n) throw std::invalid_argument("determinant: matrix must be square");

    // Bareiss fraction-free elimination; every division below is exact.
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

Int gram_determinant(const IntMat& basis) {
    check_rectangular(basis);
    IntMat gram(basis.size(), IntVec(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            gram[i][j] = dot(basis[i], basis[j]);
            gram[j][i] = gram[i][j];
        }
    return determinant(std::move(gram));
}

RatMat rational_inverse(const IntMat& a) {
    check_rectangular(a);
    size_t n = a.size();
    if (a[0].size() != n) throw std::invalid_argument("rational_inverse: matrix must be square");

    RatMat work(n, RatVec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) work[i][j] = Rat(a[i][j]);
        work[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && work[p][col] == 0) ++p;
        if (p == n) throw std::invalid_argument("rational_inverse: matrix is singular");
        std::swap(work[col], work[p]);
        Rat piv = work[col][col];
        for (size_t j = col; j < 2 * n; ++j) work[col][j] /= piv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col] == 0) continue;
            Rat f = work[i][col];
            for (size_t j = col; j < 2 * n; ++j) work[i][j] -= f * work[col][j];
        }
    }
    RatMat inv(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
    return inv;
}

}  // namespace latsieve
