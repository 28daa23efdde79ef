#include "latsieve/volume.hpp"

#include <cmath>
#include <stdexcept>

namespace latsieve {

double log_ball_volume(unsigned n, double radius) {
    if (n == 0 || radius <= 0.0) throw std::invalid_argument("log_ball_volume: bad arguments");
    double hn = 0.5 * static_cast<double>(n);
    return hn * std::log(M_PI) - std::lgamma(hn + 1.0) + n * std::log(radius);
}

double ball_volume(unsigned n, double radius) { return std::exp(log_ball_volume(n, radius)); }

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("regularized_incomplete_beta: no convergence");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("incomplete beta: a,b must be positive");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("incomplete beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double spherical_cap_volume(unsigned n, double radius, double height) {
    if (n == 0 || radius <= 0.0) throw std::invalid_argument("spherical_cap_volume: bad arguments");
    if (height <= 0.0) return 0.0;
    if (height >= 2.0 * radius) return ball_volume(n, radius);
    if (height > radius)
        return ball_volume(n, radius) - spherical_cap_volume(n, radius, 2.0 * radius - height);
    // sin^2 of the cap's half-angle
    double x = (2.0 * radius * height - height * height) / (radius * radius);
    double a = 0.5 * (static_cast<double>(n) + 1.0);
    return 0.5 * ball_volume(n, radius) * regularized_incomplete_beta(a, 0.5, x);
}

double ball_intersection_volume(unsigned n, double r1, double r2, double dist) {
    if (n == 0 || r1 <= 0.0 || r2 <= 0.0 || dist < 0.0)
        throw std::invalid_argument("ball_intersection_volume: bad arguments");
    if (dist >= r1 + r2) return 0.0;
    if (dist <= std::fabs(r1 - r2)) return ball_volume(n, std::min(r1, r2));
    // Split the lens along the radical hyperplane at distance c1 from the
    // first center; each side is a spherical cap.
    double c1 = (dist * dist - r2 * r2 + r1 * r1) / (2.0 * dist);
    double h1 = r1 - c1;
    double h2 = r2 - (dist - c1);
    return spherical_cap_volume(n, r1, h1) + spherical_cap_volume(n, r2, h2);
}

double intersection_ratio(unsigned n, double gamma) {
    if (gamma <= 0.0) return 0.0;
    if (gamma >= 2.0) return 1.0;
    return ball_intersection_volume(n, gamma, 1.0, 1.0) / ball_volume(n, 1.0);
}

double expected_center_count(unsigned n, double gamma) {
    double ratio = intersection_ratio(n, gamma);
    if (ratio <= 0.0) throw std::domain_error("expected_center_count: empty overlap");
    return 1.0 / ratio;
}

McEstimate mc_ball_volume(unsigned n, double radius, size_t samples, Rng& rng) {
    if (samples == 0) throw std::invalid_argument("mc_ball_volume: samples must be positive");
    double r2 = radius * radius;
    size_t hits = 0;
    std::vector<double> p(n);
    for (size_t s = 0; s < samples; ++s) {
        double nrm = 0.0;
        for (unsigned i = 0; i < n; ++i) {
            double c = (2.0 * uniform01(rng) - 1.0) * radius;
            nrm += c * c;
        }
        if (nrm <= r2) ++hits;
    }
    double box = std::pow(2.0 * radius, static_cast<double>(n));
    double phat = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate e;
    e.value = box * phat;
    e.std_error = box * std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
    e.samples = samples;
    e.hits = hits;
    return e;
}

McEstimate mc_ball_intersection_volume(unsigned n, double r1, double r2, double dist,
                                       size_t samples, Rng& rng) {
    if (samples == 0) throw std::invalid_argument("mc intersection: samples must be positive");
    if (dist >= r1 + r2 || n == 0)
        throw std::invalid_argument("mc intersection: balls do not overlap");
    // Bounding box of the lens: the first ball sits at the origin, the
    // second at (dist, 0, ..., 0).
    double lo0 = std::max(-r1, dist - r2);
    double hi0 = std::min(r1, dist + r2);
    double w = std::min(r1, r2);
    double box = (hi0 - lo0) * std::pow(2.0 * w, static_cast<double>(n - 1));

    size_t hits = 0;
    std::vector<double> p(n);
    for (size_t s = 0; s < samples; ++s) {
        p[0] = lo0 + uniform01(rng) * (hi0 - lo0);
        for (unsigned i = 1; i < n; ++i) p[i] = (2.0 * uniform01(rng) - 1.0) * w;
        double n1 = 0.0, n2 = 0.0;
        for (unsigned i = 0; i < n; ++i) {
            n1 += p[i] * p[i];
            double q = (i == 0) ? p[i] - dist : p[i];
            n2 += q * q;
        }
        if (n1 <= r1 * r1 && n2 <= r2 * r2) ++hits;
    }
    double phat = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate e;
    e.value = box * phat;
    e.std_error = box * std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
    e.samples = samples;
    e.hits = hits;
    return e;
}

McEstimate mc_intersection_ratio(unsigned n, double gamma, size_t samples, Rng& rng) {
    if (samples == 0) throw std::invalid_argument("mc ratio: samples must be positive");
    size_t hits = 0;
    double g2 = gamma * gamma;
    for (size_t s = 0; s < samples; ++s) {
        std::vector<double> p = sample_ball(n, 1.0, rng);
        p[0] -= 1.0;  // center of the gamma-ball sits at (1, 0, ..., 0)
        double nrm = 0.0;
        for (double c : p) nrm += c * c;
        if (nrm <= g2) ++hits;
    }
    double phat = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate e;
    e.value = phat;
    e.std_error = std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
    e.samples = samples;
    e.hits = hits;
    return e;
}

}  // namespace latsieve
