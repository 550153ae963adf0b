#ifndef WRON_ROOTS_HPP
#define WRON_ROOTS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace wron {

struct RootOptions {
  double tol = 1e-12;   // residual bound on the monic polynomial
  int max_iter = 200;
};

/// All complex roots of the polynomial with the given ascending real
/// coefficients, by Aberth-Ehrlich simultaneous iteration on the monic
/// rescaling, followed by Newton polish. Throws on non-convergence.
inline std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs,
                                                    const RootOptions& opt = {}) {
  using C = std::complex<double>;
  int n = static_cast<int>(coeffs.size()) - 1;
  while (n >= 0 && coeffs[n] == 0.0) --n;
  if (n <= 0) return {};
  std::vector<double> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = coeffs[i] / coeffs[n];

  auto eval = [&](C z, C& p, C& dp) {
    p = a[n];
    dp = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + a[i];
    }
  };

  // Backward-error scale: |p(z)| below roughly eps times this value is
  // indistinguishable from an exact root in double precision.
  auto error_scale = [&](C z) {
    double s = 0.0, pw = 1.0, az = std::abs(z);
    for (int i = 0; i <= n; ++i) {
      s += std::abs(a[i]) * pw;
      pw *= az;
    }
    return s;
  };

  // Cauchy bound radius, roots seeded on a slightly skewed circle.
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
  radius = 1.0 + radius;
  std::vector<C> z(n);
  for (int i = 0; i < n; ++i) {
    double theta = 2.0 * M_PI * i / n + 0.4;
    z[i] = std::polar(0.5 * radius + 0.5, theta);
  }

  for (int iter = 0; iter < opt.max_iter; ++iter) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      C p, dp;
      eval(z[i], p, dp);
      if (std::abs(p) > std::max(opt.tol, 1e-14 * error_scale(z[i]))) done = false;
      if (p == 0.0) continue;
      C ratio = (dp == 0.0) ? C(1e-16) : p / dp;
      C sum = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      C denom = 1.0 - ratio * sum;
      z[i] -= (denom == 0.0) ? ratio : ratio / denom;
    }
    if (done) break;
  }

  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < 6; ++s) {
      C p, dp;
      eval(z[i], p, dp);
      if (dp == 0.0) break;
      C step = p / dp;
      if (std::abs(step) < 1e-18) break;
      z[i] -= step;
    }
    C p, dp;
    eval(z[i], p, dp);
    if (std::abs(p) > std::max(opt.tol * 1e3, 1e-11 * error_scale(z[i])))
      throw std::runtime_error("poly_roots: root finder did not converge");
  }
  return z;
}

}  // namespace wron

#endif
