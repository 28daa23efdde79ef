#include "latsieve/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "latsieve/random_lattice.hpp"
#include "latsieve/sampling.hpp"

namespace latsieve {

namespace {

struct ListEntry {
    Vec64 v;
    int64_t nsq;
};

struct Best {
    Vec64 v;
    int64_t nsq = std::numeric_limits<int64_t>::max();

    void offer(const Vec64& w, int64_t n) {
        if (n > 0 && n < nsq) {
            nsq = n;
            v = w;
        }
    }
    bool found() const { return nsq != std::numeric_limits<int64_t>::max(); }
};

IntVec to_intvec(const Vec64& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Int(static_cast<long>(v[i]));
    return r;
}

SieveResult finish(const Best& best, SieveStats stats) {
    if (!best.found()) throw std::logic_error("sieve: no nonzero vector found");
    SieveResult res;
    res.vector = to_intvec(best.v);
    res.norm_sq = Int(static_cast<long>(best.nsq));
    res.stats = std::move(stats);
    return res;
}

double vec_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

}  // namespace

size_t default_sample_count(SieveAlgorithm alg, size_t dim) {
    double n = static_cast<double>(dim);
    double want = 0.0;
    switch (alg) {
        case SieveAlgorithm::kList:
            // Empirical reliability threshold on random lattices grows
            // close to 2^(n/2); the constant leaves headroom.
            want = 24.0 * std::pow(2.0, n / 2.0);
            break;
        case SieveAlgorithm::kPairs:
            want = 300.0 * std::pow(1.3, n);
            break;
    }
    return static_cast<size_t>(std::clamp(want, 5000.0, 1000000.0));
}

SieveResult sieve_shortest_list(const IntMat& basis, const SieveParams& params) {
    if (!(params.gamma > 0.0 && params.gamma < 1.0))
        throw std::invalid_argument("sieve: gamma must lie in (0,1)");
    if (params.max_passes <= 0) throw std::invalid_argument("sieve: max_passes must be positive");

    SieveContext ctx(basis);
    const size_t n = ctx.dim();
    const size_t want = params.samples ? params.samples
                                       : default_sample_count(SieveAlgorithm::kList, n);
    Rng rng(params.seed);
    SieveStats st;
    st.samples = want;

    Best best;
    std::vector<ListEntry> list;
    list.reserve(want + n);
    for (const auto& row : ctx.rows()) {
        int64_t nsq = norm_sq64(row);
        best.offer(row, nsq);
        list.push_back({row, nsq});
    }
    double width = params.sampler_width_factor * ctx.max_bstar_norm();
    for (size_t attempts = 0; list.size() < want + n && attempts < 20 * want; ++attempts) {
        Vec64 v = sample_lattice_gaussian(ctx, width, rng);
        int64_t nsq = norm_sq64(v);
        if (nsq == 0) continue;
        best.offer(v, nsq);
        list.push_back({std::move(v), nsq});
    }
    st.peak_list_size = list.size();

    std::vector<ListEntry> centers, next;
    while (st.passes < params.max_passes && list.size() >= 2) {
        int64_t max_nsq = 0;
        for (const auto& e : list) max_nsq = std::max(max_nsq, e.nsq);
        if (max_nsq <= 1) break;
        int64_t bound = static_cast<int64_t>(
            std::floor(params.gamma * params.gamma * static_cast<double>(max_nsq)));
        if (bound >= max_nsq) bound = max_nsq - 1;

        centers.clear();
        next.clear();
        ++st.passes;
        for (auto& e : list) {
            if (e.nsq <= bound) {
                next.push_back(std::move(e));
                continue;
            }
            bool reduced = false;
            for (const auto& c : centers) {
                ++st.distance_evals;
                __int128 d2w = __int128(e.nsq) + c.nsq - 2 * __int128(dot64(e.v, c.v));
                if (d2w > bound) continue;
                int64_t d2 = static_cast<int64_t>(d2w);
                ++st.reductions;
                if (d2 == 0) {
                    ++st.collisions;  // duplicate vectors annihilate
                } else {
                    Vec64 w(n);
                    for (size_t j = 0; j < n; ++j) w[j] = e.v[j] - c.v[j];
                    best.offer(w, d2);
                    next.push_back({std::move(w), d2});
                }
                reduced = true;
                break;
            }
            if (!reduced) centers.push_back(std::move(e));
        }
        st.centers_per_pass.push_back(centers.size());
        list.swap(next);
    }
    st.final_list_size = list.size();
    return finish(best, std::move(st));
}

SieveResult sieve_shortest_pairs(const IntMat& basis, const SieveParams& params) {
    if (!(params.pair_gamma > 0.0 && params.pair_gamma < 1.0))
        throw std::invalid_argument("sieve: pair_gamma must lie in (0,1)");
    if (params.xi <= 0.0 || params.target_scale <= 0.0)
        throw std::invalid_argument("sieve: xi and target_scale must be positive");
    if (params.max_passes <= 0) throw std::invalid_argument("sieve: max_passes must be positive");

    SieveContext ctx(basis);
    const size_t n = ctx.dim();
    const size_t want = params.samples ? params.samples
                                       : default_sample_count(SieveAlgorithm::kPairs, n);
    Rng rng(params.seed);
    SieveStats st;
    st.samples = want;

    const double mu = params.target_scale * gaussian_heuristic(basis);
    const double r = params.xi * mu;
    const double gamma = params.pair_gamma;

    struct Pair {
        std::vector<double> x;
        Vec64 ell;
        std::vector<double> y;
        double ynorm;
    };
    auto refresh = [&](Pair& p) {
        p.y.resize(n);
        for (size_t j = 0; j < n; ++j) p.y[j] = p.x[j] + static_cast<double>(p.ell[j]);
        p.ynorm = vec_norm(p.y);
    };

    Best best;
    for (const auto& row : ctx.rows()) best.offer(row, norm_sq64(row));

    std::vector<Pair> pairs;
    pairs.reserve(want);
    for (size_t i = 0; i < want; ++i) {
        PerturbedPair s = sample_perturbed_pair(ctx, r, rng);
        Pair p;
        p.x = std::move(s.x);
        p.ell = std::move(s.ell);
        refresh(p);
        int64_t nsq = norm_sq64(p.ell);
        if (nsq > 0) best.offer(p.ell, nsq);
        pairs.push_back(std::move(p));
    }
    st.peak_list_size = pairs.size();

    double R = 0.0;
    for (const auto& p : pairs) R = std::max(R, p.ynorm);
    const double R_floor = r / (1.0 - gamma);

    std::vector<Pair> centers, next;
    while (R > R_floor + 0.05 * mu && st.passes < params.max_passes && pairs.size() >= 2) {
        const double bound = gamma * R;
        const double keep = gamma * R + r;
        centers.clear();
        next.clear();
        ++st.passes;
        for (auto& p : pairs) {
            if (p.ynorm <= keep) {
                next.push_back(std::move(p));
                continue;
            }
            bool reduced = false;
            for (const auto& c : centers) {
                ++st.distance_evals;
                double d2 = 0.0;
                for (size_t j = 0; j < n; ++j) {
                    double t = p.y[j] - c.y[j];
                    d2 += t * t;
                }
                if (d2 > bound * bound) continue;
                ++st.reductions;
                for (size_t j = 0; j < n; ++j) p.ell[j] -= c.ell[j];
                refresh(p);
                int64_t nsq = norm_sq64(p.ell);
                if (nsq == 0)
                    ++st.collisions;
                else
                    best.offer(p.ell, nsq);
                next.push_back(std::move(p));
                reduced = true;
                break;
            }
            if (!reduced) centers.push_back(std::move(p));
        }
        st.centers_per_pass.push_back(centers.size());
        pairs.swap(next);
        R = gamma * R + r;
    }
    st.final_list_size = pairs.size();

    // The surviving lattice vectors all sit in a small ball; their pairwise
    // differences are where a shortest vector shows up.
    size_t cap = std::min<size_t>(pairs.size(), 3000);
    if (pairs.size() > cap) {
        for (size_t i = 0; i < cap; ++i) {  // partial Fisher-Yates
            size_t j = i + static_cast<size_t>(rng() % (pairs.size() - i));
            std::swap(pairs[i], pairs[j]);
        }
    }
    for (size_t i = 0; i < cap; ++i) {
        for (size_t j = i + 1; j < cap; ++j) {
            Vec64 w(n);
            bool zero = true;
            for (size_t k = 0; k < n; ++k) {
                w[k] = pairs[i].ell[k] - pairs[j].ell[k];
                zero = zero && w[k] == 0;
            }
            if (zero) {
                ++st.collisions;
                continue;
            }
            best.offer(w, norm_sq64(w));
        }
    }
    return finish(best, std::move(st));
}

}  // namespace latsieve
