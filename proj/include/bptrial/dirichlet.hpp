#pragma once

#include <array>
#include <vector>

#include "bptrial/rng.hpp"
#include "bptrial/tables.hpp"

namespace bptrial {

/// Dirichlet hyperparameters (pseudo-counts) for one treatment arm, one
/// per cell of the 2x2 efficacy/toxicity table. All entries must be
/// strictly positive.
class DirichletParams {
 public:
  DirichletParams() : DirichletParams(1.0, 1.0, 1.0, 1.0) {}
  DirichletParams(double a11, double a12, double a21, double a22);

  double a11() const { return a_[0]; }
  double a12() const { return a_[1]; }
  double a21() const { return a_[2]; }
  double a22() const { return a_[3]; }
  double cell(int i) const { return a_[static_cast<std::size_t>(i)]; }
  const std::array<double, 4>& cells() const { return a_; }
  double total() const { return a_[0] + a_[1] + a_[2] + a_[3]; }

  /// Mean of the Dirichlet distribution, alpha / total. Strictly positive.
  ProbTable mean() const;

  bool operator==(const DirichletParams&) const = default;

 private:
  std::array<double, 4> a_;
};

/// Conjugate update: Dir(alpha) prior plus multinomial counts gives
/// Dir(alpha + data).
DirichletParams posterior_params(const DirichletParams& prior,
                                 const CountTable& data);

/// One Dirichlet draw via four independent gamma variates normalized to
/// sum 1. Valid for shapes below 1, so Jeffrey's-prior cells are fine.
/// The result is strictly positive.
ProbTable sample_dirichlet(const DirichletParams& alpha, Xoshiro256pp& rng);

/// Log pmf of the Dirichlet-compound-multinomial posterior predictive for
/// future counts y given prior alpha and observed counts x. Evaluated
/// entirely in log-gamma space.
double dcm_log_pmf(const CountTable& y, const DirichletParams& alpha,
                   const CountTable& x);

/// All 2x2 count tables with total m, in lexicographic order (y11 major,
/// then y12, then y21; y22 implied). Length is C(m+3, 3).
std::vector<CountTable> enumerate_outcomes(int m);

/// C(m+3, 3), the number of outcome tables with total m.
long long outcome_count(int m);

}  // namespace bptrial
