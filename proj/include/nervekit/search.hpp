#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace nervekit {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t budget, double estimate);
  std::uint64_t budget() const { return budget_; }
  double estimate() const { return estimate_; }

 private:
  std::uint64_t budget_;
  double estimate_;
};

/// Finite constraint search. Variables are assigned in order; the domain of a variable
/// may depend on the earlier ones. A constraint is tested as soon as its last dependency
/// (`last_var`) is assigned, or once up front when `last_var` is -1.
struct SearchProblem {
  using Assignment = std::vector<int>;

  std::vector<std::function<std::vector<int>(const Assignment&)>> domains;
  struct Constraint {
    int last_var = -1;
    std::function<bool(const Assignment&)> holds;
  };
  std::vector<Constraint> constraints;
  /// Size of the unpruned search space, reported when the budget runs out.
  double estimate = 0;
};

/// All complete assignments satisfying every constraint, in the order found.
/// Throws BudgetExceeded after `budget` assignment attempts.
std::vector<std::vector<int>> solve_all(const SearchProblem& problem, std::uint64_t budget);

}  // namespace nervekit
