#pragma once

#include <stdexcept>
#include <string>

namespace bptrial {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A vector that should be a probability distribution is not one.
struct NotADistribution : Error {
  explicit NotADistribution(const std::string& what) : Error(what) {}
};

/// Two distributions passed to a divergence have different lengths.
struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& what) : Error(what) {}
};

/// Both off-diagonal cells are zero, so the conditional off-diagonal
/// distribution (and the efficacy index) is undefined.
struct DegenerateOffDiagonal : Error {
  explicit DegenerateOffDiagonal(const std::string& what) : Error(what) {}
};

/// A cell that must be strictly positive is zero.
struct NonPositiveCell : Error {
  explicit NonPositiveCell(const std::string& what) : Error(what) {}
};

/// A covariance matrix is not positive definite after degeneracy reduction.
struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& what) : Error(what) {}
};

/// An interim quantity was requested for a trial that already reached its
/// maximum sample size.
struct TrialComplete : Error {
  explicit TrialComplete(const std::string& what) : Error(what) {}
};

/// Final analysis requested with a data total different from n_max.
struct WrongSampleSize : Error {
  explicit WrongSampleSize(const std::string& what) : Error(what) {}
};

/// No calibration grid cell satisfies the type I error cap.
struct NoFeasibleCell : Error {
  explicit NoFeasibleCell(const std::string& what) : Error(what) {}
};

/// A run configuration failed schema validation.
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace bptrial
