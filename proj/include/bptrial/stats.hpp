#pragma once

#include <array>
#include <cmath>
#include <utility>

namespace bptrial {

double normal_pdf(double x);

/// Pr(Z <= x) for standard normal Z.
double normal_cdf(double x);

/// Upper tail Pr(Z > x); accurate in the far right tail via erfc.
double normal_tail(double x);

/// Inverse of normal_cdf on (0, 1). Acklam's rational approximation
/// followed by one Halley refinement; accurate to full double precision.
double normal_quantile(double p);

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK). Nodes are the
// nonnegative half; index 7 is the center. Odd indices plus the center are
// the embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[static_cast<std::size_t>(i)];
    const double fsum = f(c - dx) + f(c + dx);
    kron += kKronrodWeights[static_cast<std::size_t>(i)] * fsum;
    if (i % 2 == 1) {
      gauss += kGaussWeights[static_cast<std::size_t>(i / 2)] * fsum;
    }
  }
  kron *= h;
  gauss *= h;
  return {kron, std::fabs(kron - gauss)};
}

template <class F>
double integrate_segment(F&& f, double a, double b, double abs_tol,
                         int depth) {
  auto [value, err] = gauss_kronrod_15(f, a, b);
  if (err <= abs_tol || depth >= 52 || b - a <= 1e-15 * (std::fabs(a) + 1.0)) {
    return value;
  }
  const double c = 0.5 * (a + b);
  return integrate_segment(f, a, c, 0.5 * abs_tol, depth + 1) +
         integrate_segment(f, c, b, 0.5 * abs_tol, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod 7-15 quadrature of f over [a, b] to the given
/// absolute tolerance.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol) {
  if (!(b > a)) {
    return 0.0;
  }
  return detail::integrate_segment(f, a, b, abs_tol, 0);
}

}  // namespace bptrial
