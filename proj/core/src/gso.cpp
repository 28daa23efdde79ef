#include "latsieve/gso.hpp"

#include <stdexcept>

namespace latsieve {

Gso compute_gso(const IntMat& basis) {
    check_rectangular(basis);
    size_t n = basis.size();
    size_t m = basis[0].size();

    Gso g;
    g.mu.assign(n, RatVec(n, Rat(0)));
    g.bstar.assign(n, RatVec(m, Rat(0)));
    g.bstar_sq.assign(n, Rat(0));

    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < m; ++k) g.bstar[i][k] = Rat(basis[i][k]);
        for (size_t j = 0; j < i; ++j) {
            Rat proj = 0;
            for (size_t k = 0; k < m; ++k) proj += Rat(basis[i][k]) * g.bstar[j][k];
            g.mu[i][j] = proj / g.bstar_sq[j];
            for (size_t k = 0; k < m; ++k) g.bstar[i][k] -= g.mu[i][j] * g.bstar[j][k];
        }
        g.mu[i][i] = 1;
        g.bstar_sq[i] = norm_sq(g.bstar[i]);
        if (g.bstar_sq[i] == 0)
            throw std::invalid_argument("compute_gso: basis rows are linearly dependent");
    }
    return g;
}

std::vector<std::vector<double>> mu_to_double(const Gso& g) {
    size_t n = g.rank();
    std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) mu[i][j] = to_double(g.mu[i][j]);
    return mu;
}

std::vector<double> bstar_sq_to_double(const Gso& g) {
    std::vector<double> r(g.rank());
    for (size_t i = 0; i < r.size(); ++i) r[i] = to_double(g.bstar_sq[i]);
    return r;
}

Rat gso_gram_determinant(const Gso& g) {
    Rat p = 1;
    for (const Rat& b : g.bstar_sq) p *= b;
    return p;
}

}  // namespace latsieve
