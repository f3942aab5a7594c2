#pragma once

#include <stdexcept>
#include <string>

namespace glsoed {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// A pivot fell below the positive-definiteness tolerance during LDL^T.
struct NotPositiveDefinite : Error {
  using Error::Error;
};

/// The Fisher matrix is numerically singular: parameters not identifiable.
struct RankDeficient : Error {
  RankDeficient(const std::string& msg, int param_a, int param_b)
      : Error(msg), parameter_a(param_a), parameter_b(param_b) {}
  int parameter_a = -1;
  int parameter_b = -1;
};

struct EmptyDataset : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, long line_no) : Error(msg), line(line_no) {}
  long line = 0;
};

struct OutOfGrid : Error {
  OutOfGrid(const std::string& msg, long record_idx) : Error(msg), record(record_idx) {}
  long record = -1;
};

struct OutOfBounds : Error {
  using Error::Error;
};

/// Model evaluation failed (e.g. spin-up did not reach a periodic state).
struct ModelFailure : Error {
  using Error::Error;
};

struct NotPeriodic : Error {
  NotPeriodic(const std::string& msg, double last_residual)
      : Error(msg), residual(last_residual) {}
  double residual = 0.0;
};

struct UnstableOperator : Error {
  using Error::Error;
};

struct NonFinite : Error {
  using Error::Error;
};

struct ZeroVariance : Error {
  using Error::Error;
};

struct NegativeVariance : Error {
  using Error::Error;
};

struct ZeroParameter : Error {
  using Error::Error;
};

struct ZeroOutputSum : Error {
  using Error::Error;
};

struct EmptyCandidateSet : Error {
  using Error::Error;
};

}  // namespace glsoed
