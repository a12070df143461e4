#pragma once

#include <array>
#include <cstdint>

#include "bptrial/dirichlet.hpp"
#include "bptrial/index.hpp"
#include "bptrial/tables.hpp"

namespace bptrial {

/// Inputs to the end-of-trial posterior comparison B(Y): priors for the
/// experimental arm E and historical-control arm S, observed data x,
/// hypothetical future data y (x.total() + y.total() must equal n_max),
/// and the minimally acceptable increment delta0 per index component.
struct PosteriorSpec {
  DirichletParams alpha_e;
  DirichletParams alpha_s;
  CountTable x;
  CountTable y;
  int n_max = 0;
  std::array<double, 2> delta0{0.0, 0.0};

  void validate() const;
};

struct BivariateNormal {
  std::array<double, 2> mean{0.0, 0.0};
  CovMatrix2 cov;
};

/// Plug-in estimate for E: (alpha_E + x + y) / (sum(alpha_E) + n_max).
/// Strictly positive by construction.
ProbTable plugin_estimate_e(const PosteriorSpec& spec);

/// Plug-in estimate for S: the prior mean alpha_S / sum(alpha_S).
ProbTable plugin_estimate_s(const DirichletParams& alpha_s);

/// Upper orthant probability Pr(Z1 > t1, Z2 > t2) for a bivariate normal.
/// Degenerate (zero-variance) components reduce to the 1-D problem;
/// otherwise the probability is a single adaptive Gauss-Kronrod integral
/// of the conditional normal tail, accurate to better than 1e-6 absolute.
double bvn_upper_orthant(const BivariateNormal& d,
                         std::array<double, 2> threshold);

/// Plug-in estimate of the index difference phi(p_E) - phi(p_S).
std::array<double, 2> index_difference_estimate(const PosteriorSpec& spec);

/// Covariance of the asymptotic posterior of the index difference:
/// Sigma(p_E) / (n_max + sum(alpha_E)) + Sigma(p_S) / sum(alpha_S).
CovMatrix2 difference_cov(const PosteriorSpec& spec);

/// B(Y) by the asymptotic route: upper orthant probability beyond delta0
/// of the normal approximation to the posterior of phi_E - phi_S.
double b_asymptotic(const PosteriorSpec& spec);

/// B(Y) by simulation: fraction of paired posterior draws
/// (p_E ~ Dir(alpha_E + x + y), p_S ~ Dir(alpha_S)) with both components
/// of phi_E - phi_S strictly above delta0. Draw i uses the substream
/// (seed, i), so results are identical for a given (seed, n_sims)
/// regardless of worker count.
double b_montecarlo(const PosteriorSpec& spec, int n_sims, std::uint64_t seed,
                    int workers = 1);

/// Width of the central credible interval for one index component under
/// the asymptotic posterior phi ~ N(phi_hat, sigma_ii / n_effective).
double credible_width(double sigma_ii, double n_effective,
                      double level = 0.95);

}  // namespace bptrial
