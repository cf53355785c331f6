#pragma once

namespace linthresh::sim {

/// Nonlinear base curve on [0, 1]:
///   g(x) = 4x^2 (3 - 4x)                    for 0 <= x <= 0.5
///   g(x) = (4/3) x (4x^2 - 10x + 7) - 1     for 0.5 <= x <= 1
/// Throws std::domain_error outside [0, 1].
double g(double x);

/// Closed-form derivative of g, branch-wise. g'(0.5) = 0 from both sides.
double g_prime(double x);

/// g(x) for x <= u0, then the line through (u0, g(u0)) with slope
/// g'(u0) + delta. Continuous for every delta, kinked unless delta = 0.
double r_threshold(double x, double u0, double delta);

/// Slope and intercept of the linear piece of r_threshold.
double linear_slope(double u0, double delta);
double linear_intercept(double u0, double delta);

}  // namespace linthresh::sim
