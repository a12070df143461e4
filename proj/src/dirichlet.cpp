#include "bptrial/dirichlet.hpp"

#include <cmath>

#include "bptrial/errors.hpp"

namespace bptrial {

DirichletParams::DirichletParams(double a11, double a12, double a21,
                                 double a22)
    : a_{a11, a12, a21, a22} {
  for (double v : a_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error("Dirichlet hyperparameters must be positive and finite");
    }
  }
}

ProbTable DirichletParams::mean() const {
  const double t = total();
  return ProbTable(a_[0] / t, a_[1] / t, a_[2] / t, a_[3] / t);
}

DirichletParams posterior_params(const DirichletParams& prior,
                                 const CountTable& data) {
  return DirichletParams(prior.a11() + data.n[0], prior.a12() + data.n[1],
                         prior.a21() + data.n[2], prior.a22() + data.n[3]);
}

ProbTable sample_dirichlet(const DirichletParams& alpha, Xoshiro256pp& rng) {
  std::array<double, 4> g;
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    g[static_cast<std::size_t>(i)] = rng.gamma(alpha.cell(i));
    sum += g[static_cast<std::size_t>(i)];
  }
  return ProbTable::normalized(g[0], g[1], g[2], g[3]);
}

double dcm_log_pmf(const CountTable& y, const DirichletParams& alpha,
                   const CountTable& x) {
  const double m = y.total();
  double a_sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    a_sum += alpha.cell(i) + x.cell(i);
  }
  double lf = std::lgamma(m + 1.0) + std::lgamma(a_sum) -
              std::lgamma(a_sum + m);
  for (int i = 0; i < 4; ++i) {
    const double a = alpha.cell(i) + x.cell(i);
    const double yi = y.cell(i);
    lf += std::lgamma(a + yi) - std::lgamma(a) - std::lgamma(yi + 1.0);
  }
  return lf;
}

std::vector<CountTable> enumerate_outcomes(int m) {
  if (m < 0) {
    throw Error("outcome enumeration requires m >= 0");
  }
  std::vector<CountTable> out;
  out.reserve(static_cast<std::size_t>(outcome_count(m)));
  for (int y11 = 0; y11 <= m; ++y11) {
    for (int y12 = 0; y12 <= m - y11; ++y12) {
      for (int y21 = 0; y21 <= m - y11 - y12; ++y21) {
        out.emplace_back(y11, y12, y21, m - y11 - y12 - y21);
      }
    }
  }
  return out;
}

long long outcome_count(int m) {
  const long long n = m;
  return (n + 1) * (n + 2) * (n + 3) / 6;
}

}  // namespace bptrial
