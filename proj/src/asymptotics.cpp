#include "patavoid/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "patavoid/genfun.hpp"

namespace patavoid {

double golden_rate() { return (1.0 + std::sqrt(5.0)) / 2.0; }

double K_of_k(int k) {
  if (k < 2) throw std::invalid_argument("amplitude is defined for k >= 2");
  const double r = golden_rate();
  const double s = (1.0 - std::sqrt(5.0)) / 2.0;
  const double prefactor = r / ((r - 1.0) * (r - s));
  double prod1 = 1.0;
  double prod2 = 1.0;
  for (int j = 3; j <= k; ++j) {
    prod1 *= (1.0 - 1.0 / r) /
             ((1.0 - std::pow(r, 1.0 - j)) *
              (1.0 - 1.0 / r - std::pow(r, -static_cast<double>(j))));
    prod2 *= (1.0 - std::pow(r, -2.0)) /
             ((1.0 - std::pow(r, 2.0 - j)) *
              (1.0 - std::pow(r, -2.0) - std::pow(r, -static_cast<double>(j))));
  }
  return prefactor * (r * prod1 - prod2);
}

GrowthEstimate growth_estimate(int k) {
  return GrowthEstimate{k, K_of_k(k), golden_rate()};
}

double K_infinity(double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be > 0");
  double prev = K_of_k(2);
  for (int k = 3;; ++k) {
    const double cur = K_of_k(k);
    if (std::fabs(cur - prev) < tolerance) return cur;
    prev = cur;
  }
}

double min_modulus_root(int i, int j) {
  if (i < 1 || j <= i) throw std::invalid_argument("need 1 <= i < j");
  // x^i + x^j is strictly increasing on (0,1), from 0 to 2.
  auto eval = [i, j](double x) {
    return std::pow(x, i) + std::pow(x, j) - 1.0;
  };
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = (lo + hi) / 2.0;
    if (eval(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2.0;
}

double growth_check(long n, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double exact = composition_gf(n, k).coeff(n).convert_to<double>();
  return exact / (K_of_k(k) * std::pow(golden_rate(), static_cast<double>(n)));
}

}  // namespace patavoid
