#include "nervekit/search.hpp"

#include <cmath>
#include <string>

namespace nervekit {

namespace {

std::string budget_message(std::uint64_t budget, double estimate) {
  return "enumeration budget of " + std::to_string(budget) + " nodes exceeded (estimated search space " +
         std::to_string(static_cast<long double>(estimate)) + ")";
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t budget, double estimate)
    : std::runtime_error(budget_message(budget, estimate)), budget_(budget), estimate_(estimate) {}

std::vector<std::vector<int>> solve_all(const SearchProblem& problem, std::uint64_t budget) {
  const int vars = static_cast<int>(problem.domains.size());
  std::vector<std::vector<const SearchProblem::Constraint*>> at(vars);
  SearchProblem::Assignment assignment(vars, -1);
  std::vector<std::vector<int>> solutions;
  for (const auto& c : problem.constraints) {
    if (c.last_var < 0) {
      if (!c.holds(assignment)) return solutions;
    } else {
      at[c.last_var].push_back(&c);
    }
  }
  std::uint64_t nodes = 0;
  std::function<void(int)> extend = [&](int v) {
    if (v == vars) {
      solutions.push_back(assignment);
      return;
    }
    for (int value : problem.domains[v](assignment)) {
      if (++nodes > budget) throw BudgetExceeded(budget, problem.estimate);
      assignment[v] = value;
      bool ok = true;
      for (const auto* c : at[v]) {
        if (!c->holds(assignment)) {
          ok = false;
          break;
        }
      }
      if (ok) extend(v + 1);
    }
    assignment[v] = -1;
  };
  extend(0);
  return solutions;
}

}  // namespace nervekit
