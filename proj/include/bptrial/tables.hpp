#pragma once

#include <array>

namespace bptrial {

/// Joint 2x2 probability table for one treatment arm.
///
/// Rows index efficacy (row 1 = response), columns index toxicity
/// (column 1 = toxicity). So p11 is response with toxicity, p12 response
/// without toxicity, p21 toxicity without response, p22 neither.
/// Cells must be nonnegative and sum to one within kSumTol; construction
/// never renormalizes silently, use normalized() for that.
class ProbTable {
 public:
  static constexpr double kSumTol = 1e-12;

  ProbTable(double p11, double p12, double p21, double p22);

  /// Rescales the given nonnegative cells to sum to one.
  static ProbTable normalized(double p11, double p12, double p21, double p22);

  double p11() const { return c_[0]; }
  double p12() const { return c_[1]; }
  double p21() const { return c_[2]; }
  double p22() const { return c_[3]; }
  double cell(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::array<double, 4>& cells() const { return c_; }

  /// Marginal probability of toxicity, p.1 = p11 + p21.
  double margin_tox() const { return c_[0] + c_[2]; }
  /// Marginal probability of no toxicity, p.2 = p12 + p22.
  double margin_no_tox() const { return c_[1] + c_[3]; }
  /// Off-diagonal mass p12 + p21.
  double off_diagonal() const { return c_[1] + c_[2]; }

  double min_cell() const;
  bool strictly_positive() const { return min_cell() > 0.0; }

 private:
  std::array<double, 4> c_;
};

/// 2x2 table of nonnegative participant counts, same cell layout as
/// ProbTable. Used for observed data x, hypothetical future data y, and
/// their combination.
struct CountTable {
  std::array<int, 4> n{0, 0, 0, 0};

  CountTable() = default;
  CountTable(int n11, int n12, int n21, int n22);

  int total() const { return n[0] + n[1] + n[2] + n[3]; }
  int cell(int i) const { return n[static_cast<std::size_t>(i)]; }

  CountTable operator+(const CountTable& o) const {
    return CountTable(n[0] + o.n[0], n[1] + o.n[1], n[2] + o.n[2],
                      n[3] + o.n[3]);
  }
  bool operator==(const CountTable&) const = default;
};

}  // namespace bptrial
