#pragma once

#include <span>
#include <utility>

#include "bptrial/tables.hpp"

namespace bptrial {

/// Efficacy/toxicity index pair. Each component is a normalized
/// Jensen-Shannon distance from the worst-case reference distribution, so
/// both lie in [0, 1] and larger is better.
struct IndexVector {
  double eff = 0.0;
  double tox = 0.0;
};

/// Symmetric 2x2 covariance matrix (s21 = s12 implied).
struct CovMatrix2 {
  double s11 = 0.0;
  double s12 = 0.0;
  double s22 = 0.0;

  double det() const { return s11 * s22 - s12 * s12; }
  bool is_psd(double tol = 1e-12) const {
    return s11 >= -tol && s22 >= -tol && det() >= -tol;
  }

  CovMatrix2 scaled(double k) const { return {k * s11, k * s12, k * s22}; }
  CovMatrix2 operator+(const CovMatrix2& o) const {
    return {s11 + o.s11, s12 + o.s12, s22 + o.s22};
  }
};

/// Conditional off-diagonal probabilities (p12*, p21*) where
/// pij* = pij / (pij + pji). Throws DegenerateOffDiagonal when
/// p12 + p21 = 0.
std::pair<double, double> conditional_probs(const ProbTable& p);

/// Jensen-Shannon divergence of two discrete distributions, natural log,
/// with 0*log(0/.) taken as 0. Result lies in [0, log 2], is symmetric,
/// and is zero iff p = q.
double jsd(std::span<const double> p, std::span<const double> q);

/// Efficacy index: JSD of (p12*, p21*) from the worst case (0, 1),
/// normalized by log 2. Zero iff p12* = 0, one iff p12* = 1.
double phi_eff(const ProbTable& p);

/// Toxicity index: JSD of the toxicity margin (p.1, p.2) from the worst
/// case (1, 0), normalized by log 2. Zero iff p.1 = 1, one iff p.1 = 0.
double phi_tox(const ProbTable& p);

IndexVector phi_vector(const ProbTable& p);

/// Delta-method covariance of sqrt(N) * (phi_hat - phi) under multinomial
/// sampling. Requires all four cells strictly positive (NonPositiveCell
/// otherwise); Bayesian plug-in estimates with positive hyperparameters
/// always satisfy this.
CovMatrix2 asymptotic_cov(const ProbTable& p);

}  // namespace bptrial
