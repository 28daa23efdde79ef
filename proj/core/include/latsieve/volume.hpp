#pragma once

#include <cstddef>

#include "latsieve/sampling.hpp"

namespace latsieve {

/// ln of the volume of the n-ball of the given radius.
double log_ball_volume(unsigned n, double radius);
double ball_volume(unsigned n, double radius);

/// Regularized incomplete beta function I_x(a, b), a,b > 0, x in [0,1].
double regularized_incomplete_beta(double a, double b, double x);

/// Volume of the cap of height h (0 <= h <= 2R) cut from the n-ball of
/// radius R by a hyperplane.
double spherical_cap_volume(unsigned n, double radius, double height);

/// Volume of the intersection of two n-balls with radii r1, r2 whose
/// centers are `dist` apart.
double ball_intersection_volume(unsigned n, double r1, double r2, double dist);

/// vol(B(c, gamma) ∩ B(0, 1)) / vol(B(0, 1)) with ||c|| = 1: the fraction
/// of the unit ball within reach of a sieve center sitting on its surface.
double intersection_ratio(unsigned n, double gamma);

/// First-order estimate of how many centers a sieve pass needs so that a
/// fresh boundary point is reduced by one of them: the reciprocal of
/// intersection_ratio.
double expected_center_count(unsigned n, double gamma);

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    size_t samples = 0;
    size_t hits = 0;
};

/// Hit-or-miss Monte Carlo from the enclosing hypercube [-R, R]^n.
McEstimate mc_ball_volume(unsigned n, double radius, size_t samples, Rng& rng);

/// Hit-or-miss Monte Carlo for the two-ball intersection, sampling the
/// bounding box of the lens.
McEstimate mc_ball_intersection_volume(unsigned n, double r1, double r2, double dist,
                                       size_t samples, Rng& rng);

/// Monte Carlo counterpart of intersection_ratio: samples uniformly from
/// the unit ball and counts points within gamma of a fixed surface point.
McEstimate mc_intersection_ratio(unsigned n, double gamma, size_t samples, Rng& rng);

}  // namespace latsieve
