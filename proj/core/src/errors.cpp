#include "frcodes/errors.hpp"

namespace fr {

namespace {

std::string stall_message(int row, int step) {
    return "construction stalled at row " + std::to_string(row) + ", step " +
           std::to_string(step) + ": no legal placement";
}

}  // namespace

ConstructionStalledError::ConstructionStalledError(int row, int step,
                                                   std::string partial_text)
    : ConstructionError(stall_message(row, step)),
      row_(row),
      step_(step),
      partial_text_(std::move(partial_text)) {}

NotCompletableError::NotCompletableError(int row, const std::string& what)
    : ConstructionError(row > 0 ? "row " + std::to_string(row) + ": " + what
                                : what),
      row_(row) {}

SearchBudgetError::SearchBudgetError(std::string partial_best_text)
    : BudgetExceededError("canonical-form search budget exceeded"),
      partial_best_(std::move(partial_best_text)) {}

}  // namespace fr
