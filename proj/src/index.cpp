#include "bptrial/index.hpp"

#include <algorithm>
#include <cmath>

#include "bptrial/errors.hpp"

namespace bptrial {

namespace {

constexpr double kLog2 = 0.69314718055994530942;

double xlogx_ratio(double x, double denom) {
  // x * log(2x / denom) with the 0*log 0 convention.
  return x > 0.0 ? x * std::log(2.0 * x / denom) : 0.0;
}

void check_distribution(std::span<const double> p, const char* name) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw NotADistribution(std::string(name) +
                             " has a negative or non-finite entry");
    }
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw NotADistribution(std::string(name) + " does not sum to 1");
  }
}

}  // namespace

std::pair<double, double> conditional_probs(const ProbTable& p) {
  const double off = p.off_diagonal();
  if (!(off > 0.0)) {
    throw DegenerateOffDiagonal(
        "p12 + p21 = 0: conditional off-diagonal distribution undefined");
  }
  return {p.p12() / off, p.p21() / off};
}

double jsd(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw LengthMismatch("jsd arguments have different lengths");
  }
  check_distribution(p, "first jsd argument");
  check_distribution(q, "second jsd argument");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double denom = p[i] + q[i];
    if (denom > 0.0) {
      sum += xlogx_ratio(p[i], denom) + xlogx_ratio(q[i], denom);
    }
  }
  // Tiny negatives can appear from rounding when p is very close to q.
  return std::clamp(0.5 * sum, 0.0, kLog2);
}

double phi_eff(const ProbTable& p) {
  const auto [ps12, ps21] = conditional_probs(p);
  const double v =
      (ps12 * kLog2 + xlogx_ratio(ps21, ps21 + 1.0) + std::log(2.0 / (ps21 + 1.0))) /
      (2.0 * kLog2);
  return std::clamp(v, 0.0, 1.0);
}

double phi_tox(const ProbTable& p) {
  const double m1 = p.margin_tox();
  const double m2 = p.margin_no_tox();
  const double v =
      (m2 * kLog2 + xlogx_ratio(m1, m1 + 1.0) + std::log(2.0 / (m1 + 1.0))) /
      (2.0 * kLog2);
  return std::clamp(v, 0.0, 1.0);
}

IndexVector phi_vector(const ProbTable& p) { return {phi_eff(p), phi_tox(p)}; }

CovMatrix2 asymptotic_cov(const ProbTable& p) {
  if (!p.strictly_positive()) {
    throw NonPositiveCell(
        "asymptotic covariance requires strictly positive cells");
  }
  const auto [ps12, ps21] = conditional_probs(p);
  const double m1 = p.margin_tox();
  const double m2 = p.margin_no_tox();
  const double c = 1.0 / (2.0 * kLog2);
  const double log_eff = std::log(ps21 / (ps21 + 1.0));
  const double log_tox = std::log(m1 / (m1 + 1.0));
  CovMatrix2 cov;
  cov.s11 = (c * log_eff) * (c * log_eff) * ps12 * ps21 / p.off_diagonal();
  cov.s12 = c * c * ps12 * ps21 * log_eff * log_tox;
  cov.s22 = (c * log_tox) * (c * log_tox) * m1 * m2;
  return cov;
}

}  // namespace bptrial
