#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace c2inv {

// Values built over different numbers of V2 summands were combined.
class DimensionError : public std::invalid_argument {
  public:
    DimensionError(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("dimension mismatch: m=" + std::to_string(lhs) + " vs m=" + std::to_string(rhs))
    {
    }
};

// An operation that needs a nonzero / nonempty input got an empty one.
class EmptyError : public std::domain_error {
  public:
    explicit EmptyError(const std::string& what) : std::domain_error(what) {}
};

// A documented precondition does not hold (vacuous relation, bad subset, ...).
class PreconditionError : public std::invalid_argument {
  public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::invalid_argument {
  public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// The oracle refused to build a matrix larger than its bit-cell budget.
class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(double cells, double budget)
        : std::runtime_error("size guard: estimated " + std::to_string(static_cast<long long>(cells)) +
                             " bit-cells exceeds budget " + std::to_string(static_cast<long long>(budget))),
          cells_(cells), budget_(budget)
    {
    }
    double cells() const { return cells_; }
    double budget() const { return budget_; }

  private:
    double cells_;
    double budget_;
};

// Raised when an invariant that the mathematics guarantees is observed broken.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void check_same_m(std::size_t lhs, std::size_t rhs)
{
    if (lhs != rhs)
        throw DimensionError(lhs, rhs);
}

}  // namespace c2inv
