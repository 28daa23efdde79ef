#include "latsieve/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace latsieve {

namespace {

constexpr int64_t kMaxEntry = int64_t(1) << 24;

double checked_norm(__int128 s) {
    if (s > (__int128(1) << 62)) throw std::domain_error("sieve vector norm overflow");
    return static_cast<double>(static_cast<int64_t>(s));
}

}  // namespace

double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gauss(Rng& rng) {
    double u1;
    do {
        u1 = uniform01(rng);
    } while (u1 <= 0.0);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> sample_ball(size_t n, double radius, Rng& rng) {
    if (n == 0 || radius <= 0.0) throw std::invalid_argument("sample_ball: bad arguments");
    std::vector<double> v(n);
    double nrm = 0.0;
    do {
        nrm = 0.0;
        for (double& c : v) {
            c = gauss(rng);
            nrm += c * c;
        }
    } while (nrm == 0.0);
    nrm = std::sqrt(nrm);
    double scale = radius * std::pow(uniform01(rng), 1.0 / static_cast<double>(n)) / nrm;
    for (double& c : v) c *= scale;
    return v;
}

int64_t dot64(const Vec64& a, const Vec64& b) {
    __int128 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += __int128(a[i]) * b[i];
    if (s > (__int128(1) << 62) || s < -(__int128(1) << 62))
        throw std::domain_error("sieve vector dot overflow");
    return static_cast<int64_t>(s);
}

int64_t norm_sq64(const Vec64& a) {
    __int128 s = 0;
    for (int64_t x : a) s += __int128(x) * x;
    checked_norm(s);
    return static_cast<int64_t>(s);
}

SieveContext::SieveContext(const IntMat& basis) {
    check_rectangular(basis);
    size_t n = basis.size();
    if (basis[0].size() != n)
        throw std::invalid_argument("SieveContext: basis must be square");

    rows_.assign(n, Vec64(n));
    rows_d_.assign(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Int& e = basis[i][j];
            if (!e.fits_slong_p() || abs(e) > kMaxEntry)
                throw std::domain_error(
                    "SieveContext: basis entries exceed 2^24, reduce the basis first");
            rows_[i][j] = e.get_si();
            rows_d_[i][j] = static_cast<double>(rows_[i][j]);
        }

    RatMat inv = rational_inverse(basis);  // throws when singular
    inv_d_.assign(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv_d_[i][j] = to_double(inv[i][j]);

    Gso g = compute_gso(basis);
    bstar_sq_d_ = bstar_sq_to_double(g);
    bstar_d_.assign(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) bstar_d_[i][j] = to_double(g.bstar[i][j]);
    for (double b : bstar_sq_d_) max_bstar_ = std::max(max_bstar_, std::sqrt(b));
}

namespace {

// Integer draw close to a Gaussian of width sigma centered at c.
int64_t discrete_gaussian(double c, double sigma, Rng& rng) {
    double tail = std::max(1.0, 8.0 * sigma);
    int64_t lo = static_cast<int64_t>(std::floor(c - tail));
    int64_t hi = static_cast<int64_t>(std::ceil(c + tail));
    double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    double total = 0.0;
    for (int64_t z = lo; z <= hi; ++z) {
        double d = static_cast<double>(z) - c;
        total += std::exp(-d * d * inv2s2);
    }
    double u = uniform01(rng) * total;
    double acc = 0.0;
    for (int64_t z = lo; z <= hi; ++z) {
        double d = static_cast<double>(z) - c;
        acc += std::exp(-d * d * inv2s2);
        if (u < acc) return z;
    }
    return hi;
}

}  // namespace

Vec64 sample_lattice_gaussian(const SieveContext& ctx, double width, Rng& rng) {
    if (width <= 0.0) throw std::invalid_argument("sample_lattice_gaussian: width must be positive");
    size_t n = ctx.dim();
    std::vector<double> target(n, 0.0);
    std::vector<int64_t> z(n, 0);
    for (size_t ii = n; ii-- > 0;) {
        double c = 0.0;
        for (size_t j = 0; j < n; ++j) c += target[j] * ctx.bstar_d()[ii][j];
        c /= ctx.bstar_sq_d()[ii];
        double sigma = width / std::sqrt(ctx.bstar_sq_d()[ii]);
        z[ii] = discrete_gaussian(c, sigma, rng);
        if (z[ii] != 0)
            for (size_t j = 0; j < n; ++j)
                target[j] -= static_cast<double>(z[ii]) * ctx.rows_d()[ii][j];
    }
    Vec64 v(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (z[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) v[j] += z[i] * ctx.rows()[i][j];
    }
    return v;
}

PerturbedPair sample_perturbed_pair(const SieveContext& ctx, double r, Rng& rng) {
    size_t n = ctx.dim();
    PerturbedPair p;
    p.x = sample_ball(n, r, rng);

    // Basis coordinates of x, then shift by -floor to land in the
    // fundamental parallelepiped. ell = -sum_i floor(c_i) b_i is exact.
    std::vector<double> coords(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        double c = 0.0;
        for (size_t j = 0; j < n; ++j) c += p.x[j] * ctx.inverse_d()[j][i];
        coords[i] = c;
    }
    p.ell.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        int64_t m = static_cast<int64_t>(std::floor(coords[i]));
        if (m == 0) continue;
        for (size_t j = 0; j < n; ++j) p.ell[j] -= m * ctx.rows()[i][j];
    }
    return p;
}

}  // namespace latsieve
