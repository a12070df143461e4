#include "bptrial/tables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bptrial/errors.hpp"

namespace bptrial {

namespace {

std::string cells_str(double a, double b, double c, double d) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ", " << d << ")";
  return os.str();
}

}  // namespace

ProbTable::ProbTable(double p11, double p12, double p21, double p22)
    : c_{p11, p12, p21, p22} {
  for (double v : c_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw NotADistribution("probability table has a negative or non-finite cell " +
                             cells_str(p11, p12, p21, p22));
    }
  }
  const double sum = c_[0] + c_[1] + c_[2] + c_[3];
  if (std::fabs(sum - 1.0) > kSumTol) {
    throw NotADistribution("probability table cells must sum to 1, got " +
                           cells_str(p11, p12, p21, p22));
  }
}

ProbTable ProbTable::normalized(double p11, double p12, double p21,
                                double p22) {
  const double sum = p11 + p12 + p21 + p22;
  if (!(sum > 0.0) || !std::isfinite(sum) || p11 < 0.0 || p12 < 0.0 ||
      p21 < 0.0 || p22 < 0.0) {
    throw NotADistribution("cannot normalize table " +
                           cells_str(p11, p12, p21, p22));
  }
  return ProbTable(p11 / sum, p12 / sum, p21 / sum, p22 / sum);
}

double ProbTable::min_cell() const {
  return std::min(std::min(c_[0], c_[1]), std::min(c_[2], c_[3]));
}

CountTable::CountTable(int n11, int n12, int n21, int n22)
    : n{n11, n12, n21, n22} {
  for (int v : n) {
    if (v < 0) {
      throw Error("count table has a negative cell");
    }
  }
}

}  // namespace bptrial
