#pragma once

#include <stdexcept>
#include <string>

namespace fr {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Precondition or input-contract violation (bad parameters, dimension
/// mismatch, invalid matrix handed to a converter, ...).
class InvalidArgumentError : public Error {
  public:
    using Error::Error;
};

/// A construction could not be completed. Subclasses carry the failing
/// position so callers can report it.
class ConstructionError : public Error {
  public:
    using Error::Error;
};

/// The incidence fill found no legal placement. `row` and `step` are
/// 1-based; `partial_text` holds the matrix state at the stall in the
/// line-per-row text format.
class ConstructionStalledError : public ConstructionError {
  public:
    ConstructionStalledError(int row, int step, std::string partial_text);
    int row() const { return row_; }
    int step() const { return step_; }
    const std::string& partial_text() const { return partial_text_; }

  private:
    int row_;
    int step_;
    std::string partial_text_;
};

/// Safety bound on fill iterations tripped.
class IterationBoundError : public ConstructionError {
  public:
    using ConstructionError::ConstructionError;
};

/// An adjacency fill or graph construction cannot reach d-regularity.
/// `row` is the offending row/vertex (1-based), 0 when not applicable.
class NotCompletableError : public ConstructionError {
  public:
    NotCompletableError(int row, const std::string& what);
    int row() const { return row_; }

  private:
    int row_ = 0;
};

/// A failed node stores a packet with no surviving replica.
class NoReplicaError : public ConstructionError {
  public:
    using ConstructionError::ConstructionError;
};

/// A configurable work bound was exceeded (canonicalization search nodes,
/// subset enumeration, ...).
class BudgetExceededError : public Error {
  public:
    using Error::Error;
};

/// Canonical-form search ran out of node budget. Carries the best matrix
/// found so far in text format.
class SearchBudgetError : public BudgetExceededError {
  public:
    SearchBudgetError(std::string partial_best_text);
    const std::string& partial_best_text() const { return partial_best_; }

  private:
    std::string partial_best_;
};

/// Instance too large for the brute-force equivalence oracle.
class SizeTooLargeError : public BudgetExceededError {
  public:
    using BudgetExceededError::BudgetExceededError;
};

}  // namespace fr
