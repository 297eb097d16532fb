#pragma once

#include <cstdint>
#include <stdexcept>

#include "betw/formula.hpp"
#include "betw/frame.hpp"

namespace betw::fin {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
      : std::runtime_error("validity enumeration needs " + std::to_string(needed) +
                           " evaluations, budget is " + std::to_string(budget)) {}
};

// Extension of f in m: membership flag per world.
std::vector<char> extension_finite(const FiniteModel& m, const Formula& f);

bool eval_finite(const FiniteModel& m, const Formula& f, int world);

struct ValidityReport {
  bool holds = true;
  FiniteModel countermodel;  // populated when holds is false
  int world = -1;            // failing world
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// Frame validity by exhaustive enumeration of valuations: every proposition
// of phi ranges over all 2^n world sets, every nominal over all n worlds.
// Propositional enumeration is skipped when phi is pure.  Throws
// BudgetExceeded when the total number of world evaluations would exceed the
// budget.
ValidityReport frame_valid_finite(const Frame3& f, const Formula& phi,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace betw::fin
