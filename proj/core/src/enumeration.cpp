#include "latsieve/enumeration.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

#include "latsieve/gso.hpp"

namespace latsieve {

EnumerationResult enumerate_shortest(const IntMat& basis) {
    check_rectangular(basis);
    const int n = static_cast<int>(basis.size());

    Gso g = compute_gso(basis);
    auto mu = mu_to_double(g);
    auto r = bstar_sq_to_double(g);

    // Any nonzero vector at least as short as the shortest input row exists,
    // so start the pruning bound there (with a little slack for rounding).
    Int min_row = norm_sq(basis[0]);
    for (int i = 1; i < n; ++i) {
        Int m = norm_sq(basis[i]);
        if (m < min_row) min_row = m;
    }
    double bound = to_double(min_row) * (1.0 + 1e-9);

    // Depth-first search over coefficient vectors, level n-1 chosen first.
    // partdist[i] = sum over levels above i of r_j * (x_j - center_j)^2.
    std::vector<double> center(n, 0.0), partdist(n, 0.0);
    std::vector<int64_t> x(n, 0), dx(n, 0), d2x(n, 0);
    std::vector<std::vector<int64_t>> candidates;
    uint64_t nodes = 0;

    auto is_all_zero = [&] {
        for (int j = 0; j < n; ++j)
            if (x[j] != 0) return false;
        return true;
    };
    auto zigzag_step = [&](int i) {
        x[i] += dx[i];
        d2x[i] = -d2x[i];
        dx[i] = d2x[i] - dx[i];
    };
    auto enter_level = [&](int i) {
        double c = 0.0;
        for (int j = i + 1; j < n; ++j) c -= mu[j][i] * static_cast<double>(x[j]);
        center[i] = c;
        x[i] = std::llround(c);
        double y = c - static_cast<double>(x[i]);
        dx[i] = d2x[i] = (y >= 0.0) ? 1 : -1;
    };

    int i = n - 1;
    enter_level(i);
    while (true) {
        ++nodes;
        double y = static_cast<double>(x[i]) - center[i];
        double dist = partdist[i] + y * y * r[i];
        if (dist <= bound) {
            if (i == 0) {
                if (!is_all_zero()) {
                    candidates.push_back(x);
                    bound = dist;
                }
                zigzag_step(0);
            } else {
                partdist[i - 1] = dist;
                --i;
                enter_level(i);
            }
        } else {
            if (i == n - 1) break;
            ++i;
            zigzag_step(i);
        }
    }

    if (candidates.empty())
        throw std::logic_error("enumerate_shortest: no candidate found");

    // Pick the exact minimum among the recorded improvements.
    EnumerationResult best;
    best.nodes = nodes;
    bool have = false;
    for (const auto& cand : candidates) {
        IntVec coeffs(cand.size());
        for (size_t j = 0; j < cand.size(); ++j) coeffs[j] = Int(static_cast<long>(cand[j]));
        IntVec v = mat_vec_mul_left(coeffs, basis);
        Int nsq = norm_sq(v);
        if (!have || nsq < best.norm_sq) {
            best.coeffs = std::move(coeffs);
            best.vector = std::move(v);
            best.norm_sq = std::move(nsq);
            have = true;
        }
    }
    return best;
}

Int shortest_norm_sq(const IntMat& basis) { return enumerate_shortest(basis).norm_sq; }

}  // namespace latsieve
