#include "bptrial/inference.hpp"

#include <atomic>
#include <cmath>
#include <vector>

#include "bptrial/errors.hpp"
#include "bptrial/parallel.hpp"
#include "bptrial/stats.hpp"

namespace bptrial {

namespace {

// Beyond |z| = 8.5 the standard normal carries less than 1e-16 mass, far
// below the 1e-6 accuracy contract.
constexpr double kTailCut = 8.5;
constexpr double kOrthantTol = 1e-10;

double orthant_1d(double mean, double var, double t) {
  if (var > 0.0) {
    return normal_tail((t - mean) / std::sqrt(var));
  }
  return mean > t ? 1.0 : 0.0;
}

}  // namespace

void PosteriorSpec::validate() const {
  if (n_max <= 0) {
    throw Error("n_max must be positive");
  }
  if (x.total() + y.total() != n_max) {
    throw Error("observed plus future counts must total n_max");
  }
}

ProbTable plugin_estimate_e(const PosteriorSpec& spec) {
  spec.validate();
  const double denom = spec.alpha_e.total() + spec.n_max;
  const CountTable data = spec.x + spec.y;
  return ProbTable::normalized(spec.alpha_e.a11() + data.n[0],
                               spec.alpha_e.a12() + data.n[1],
                               spec.alpha_e.a21() + data.n[2],
                               spec.alpha_e.a22() + data.n[3] +
                                   0.0 * denom);
}

ProbTable plugin_estimate_s(const DirichletParams& alpha_s) {
  return alpha_s.mean();
}

double bvn_upper_orthant(const BivariateNormal& d,
                         std::array<double, 2> threshold) {
  const double v1 = d.cov.s11;
  const double v2 = d.cov.s22;
  if (v1 < 0.0 || v2 < 0.0) {
    throw NotPositiveDefinite("negative variance in orthant probability");
  }
  if (v1 == 0.0) {
    return d.mean[0] > threshold[0] ? orthant_1d(d.mean[1], v2, threshold[1])
                                    : 0.0;
  }
  if (v2 == 0.0) {
    return d.mean[1] > threshold[1] ? orthant_1d(d.mean[0], v1, threshold[0])
                                    : 0.0;
  }
  const double s1 = std::sqrt(v1);
  const double s2 = std::sqrt(v2);
  double rho = d.cov.s12 / (s1 * s2);
  if (std::fabs(rho) > 1.0) {
    if (std::fabs(rho) > 1.0 + 1e-9) {
      throw NotPositiveDefinite("correlation outside [-1, 1]");
    }
    rho = rho > 0.0 ? 1.0 : -1.0;
  }
  const double z1 = (threshold[0] - d.mean[0]) / s1;
  const double z2 = (threshold[1] - d.mean[1]) / s2;
  if (std::fabs(rho) >= 1.0 - 1e-12) {
    // Comonotone limit: the second component is a deterministic affine
    // function of the first.
    if (rho > 0.0) {
      return normal_tail(std::max(z1, z2));
    }
    return std::max(0.0, normal_cdf(-z2) - normal_cdf(z1));
  }
  if (z1 >= kTailCut) {
    return 0.0;
  }
  const double sr = std::sqrt((1.0 - rho) * (1.0 + rho));
  const double lo = std::max(z1, -kTailCut);
  const double p = integrate(
      [rho, sr, z2](double z) {
        return normal_pdf(z) * normal_tail((z2 - rho * z) / sr);
      },
      lo, kTailCut, kOrthantTol);
  return std::clamp(p, 0.0, 1.0);
}

std::array<double, 2> index_difference_estimate(const PosteriorSpec& spec) {
  const IndexVector e = phi_vector(plugin_estimate_e(spec));
  const IndexVector s = phi_vector(plugin_estimate_s(spec.alpha_s));
  return {e.eff - s.eff, e.tox - s.tox};
}

CovMatrix2 difference_cov(const PosteriorSpec& spec) {
  const CovMatrix2 cov_e = asymptotic_cov(plugin_estimate_e(spec));
  const CovMatrix2 cov_s = asymptotic_cov(plugin_estimate_s(spec.alpha_s));
  return cov_e.scaled(1.0 / (spec.n_max + spec.alpha_e.total())) +
         cov_s.scaled(1.0 / spec.alpha_s.total());
}

double b_asymptotic(const PosteriorSpec& spec) {
  const BivariateNormal diff{index_difference_estimate(spec),
                             difference_cov(spec)};
  return bvn_upper_orthant(diff, spec.delta0);
}

double b_montecarlo(const PosteriorSpec& spec, int n_sims, std::uint64_t seed,
                    int workers) {
  spec.validate();
  if (n_sims < 1) {
    throw Error("b_montecarlo requires n_sims >= 1");
  }
  const DirichletParams post_e =
      posterior_params(spec.alpha_e, spec.x + spec.y);
  const DirichletParams& prior_s = spec.alpha_s;
  const std::array<double, 2> d0 = spec.delta0;
  std::atomic<long long> hits{0};
  parallel_chunks(n_sims, workers, [&](int begin, int end) {
    long long local = 0;
    for (int i = begin; i < end; ++i) {
      Xoshiro256pp stream = Xoshiro256pp::substream(seed, static_cast<std::uint64_t>(i));
      const ProbTable p_e = sample_dirichlet(post_e, stream);
      const ProbTable p_s = sample_dirichlet(prior_s, stream);
      const IndexVector phi_e = phi_vector(p_e);
      const IndexVector phi_s = phi_vector(p_s);
      if (phi_e.eff - phi_s.eff > d0[0] && phi_e.tox - phi_s.tox > d0[1]) {
        ++local;
      }
    }
    hits.fetch_add(local, std::memory_order_relaxed);
  });
  return static_cast<double>(hits.load()) / static_cast<double>(n_sims);
}

double credible_width(double sigma_ii, double n_effective, double level) {
  if (!(sigma_ii >= 0.0) || !(n_effective > 0.0)) {
    throw Error("credible_width requires sigma_ii >= 0 and n_effective > 0");
  }
  if (!(level > 0.0 && level < 1.0)) {
    throw Error("credible level must lie in (0, 1)");
  }
  const double z = normal_quantile(0.5 + 0.5 * level);
  return 2.0 * z * std::sqrt(sigma_ii / n_effective);
}

}  // namespace bptrial
