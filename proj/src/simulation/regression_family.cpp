#include "linthresh/simulation/regression_family.hpp"

#include <stdexcept>
#include <string>

namespace linthresh::sim {

namespace {

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

void require_open_unit(double u0) {
  if (!(u0 > 0.0 && u0 < 1.0)) {
    throw std::domain_error("threshold u0 must lie in (0, 1), got " + std::to_string(u0));
  }
}

}  // namespace

double g(double x) {
  require_unit(x, "x");
  if (x <= 0.5) return 4.0 * x * x * (3.0 - 4.0 * x);
  return (4.0 / 3.0) * x * (4.0 * x * x - 10.0 * x + 7.0) - 1.0;
}

double g_prime(double x) {
  require_unit(x, "x");
  if (x <= 0.5) return 24.0 * x - 48.0 * x * x;
  return (4.0 / 3.0) * (12.0 * x * x - 20.0 * x + 7.0);
}

double linear_slope(double u0, double delta) {
  require_open_unit(u0);
  return g_prime(u0) + delta;
}

double linear_intercept(double u0, double delta) {
  return g(u0) - linear_slope(u0, delta) * u0;
}

double r_threshold(double x, double u0, double delta) {
  require_unit(x, "x");
  require_open_unit(u0);
  if (x <= u0) return g(x);
  return linear_slope(u0, delta) * (x - u0) + g(u0);
}

}  // namespace linthresh::sim
