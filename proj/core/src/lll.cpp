#include "latsieve/lll.hpp"

#include <stdexcept>
#include <utility>

namespace latsieve {

namespace {

void validate_delta(const Rat& delta) {
    if (delta <= Rat(1, 4) || delta > 1)
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1]");
}

// b_k -= r * b_j, with the matching mu row update. b* is unchanged.
void size_reduce_step(IntMat& basis, IntMat* transform, RatMat& mu, size_t k, size_t j,
                      LllStats& stats) {
    Int r = round_rat(mu[k][j]);
    if (r == 0) return;
    Rat rq(r);
    for (size_t c = 0; c < basis[k].size(); ++c) basis[k][c] -= r * basis[j][c];
    if (transform)
        for (size_t c = 0; c < (*transform)[k].size(); ++c)
            (*transform)[k][c] -= r * (*transform)[j][c];
    for (size_t l = 0; l < j; ++l) mu[k][l] -= rq * mu[j][l];
    mu[k][j] -= rq;
    ++stats.size_reductions;
}

LllStats run_lll(IntMat& basis, IntMat* transform, const LllParams& params) {
    check_rectangular(basis);
    validate_delta(params.delta);

    size_t n = basis.size();
    LllStats stats;
    if (n == 1) {
        if (is_zero(basis[0]))
            throw std::invalid_argument("lll_reduce: basis rows are linearly dependent");
        return stats;
    }

    Gso g = compute_gso(basis);  // throws on dependent rows
    RatMat& mu = g.mu;
    RatVec& bsq = g.bstar_sq;

    size_t k = 1;
    while (k < n) {
        for (size_t j = k; j-- > 0;) size_reduce_step(basis, transform, mu, k, j, stats);

        Rat lhs = bsq[k];
        Rat rhs = (params.delta - mu[k][k - 1] * mu[k][k - 1]) * bsq[k - 1];
        if (lhs >= rhs) {
            ++k;
            continue;
        }

        std::swap(basis[k - 1], basis[k]);
        if (transform) std::swap((*transform)[k - 1], (*transform)[k]);
        ++stats.swaps;

        // Exact Gram-Schmidt update after swapping rows k-1 and k.
        Rat m = mu[k][k - 1];
        Rat bk1 = bsq[k - 1];
        Rat bk = bsq[k];
        Rat bk1_new = bk + m * m * bk1;
        Rat m_new = m * bk1 / bk1_new;
        bsq[k] = bk1 * bk / bk1_new;
        bsq[k - 1] = bk1_new;
        mu[k][k - 1] = m_new;
        for (size_t j = 0; j + 1 < k; ++j) std::swap(mu[k - 1][j], mu[k][j]);
        for (size_t i = k + 1; i < n; ++i) {
            Rat t = mu[i][k];
            mu[i][k] = mu[i][k - 1] - m * t;
            mu[i][k - 1] = t + m_new * mu[i][k];
        }

        if (k > 1) --k;
    }
    return stats;
}

}  // namespace

LllStats lll_reduce(IntMat& basis, const LllParams& params) {
    return run_lll(basis, nullptr, params);
}

LllStats lll_reduce(IntMat& basis, IntMat& transform, const LllParams& params) {
    check_rectangular(basis);
    transform = identity_matrix(basis.size());
    return run_lll(basis, &transform, params);
}

bool is_size_reduced(const IntMat& basis) {
    Gso g = compute_gso(basis);
    for (size_t i = 1; i < g.rank(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Rat m = g.mu[i][j];
            if (2 * abs(m.get_num()) > m.get_den()) return false;
        }
    return true;
}

bool satisfies_lovasz(const IntMat& basis, const Rat& delta) {
    Gso g = compute_gso(basis);
    for (size_t k = 1; k < g.rank(); ++k) {
        Rat lhs = g.bstar_sq[k];
        Rat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.bstar_sq[k - 1];
        if (lhs < rhs) return false;
    }
    return true;
}

}  // namespace latsieve
