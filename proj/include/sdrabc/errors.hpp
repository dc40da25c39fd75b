#pragma once

#include <stdexcept>
#include <string>

namespace sdrabc {

/// Mismatched vector lengths, non-square matrices, k > n and the like.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value outside its documented domain (empty data, bad quantile, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Data that defeats the requested statistic (constant response, zero denominator).
class DegenerateDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// PSVM fit could not produce a usable map (all slices single-class, empty eigenbasis).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ABC run produced summaries that carry no information (zero variance everywhere).
class InferenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation grid fails its coverage/resolution checks.
class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root finder failed to converge.
class RootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sdrabc
