#include "graphcodes/errors.hpp"

#include <utility>

namespace graphcodes {

NotAPrimePower::NotAPrimePower(long long q)
    : Error("not a supported prime power: " + std::to_string(q)) {}

CapExceeded::CapExceeded(std::string what, BigInt required, BigInt cap)
    : Error(what + ": requires " + required.str() + ", cap is " + cap.str()),
      required_(std::move(required)),
      cap_(std::move(cap)) {}

BudgetExceeded::BudgetExceeded(std::string what, BigInt required, BigInt budget)
    : Error(what + ": requires " + required.str() + ", budget is " + budget.str()),
      required_(std::move(required)),
      budget_(std::move(budget)) {}

LengthMismatch::LengthMismatch(BigInt observed, BigInt expected)
    : Error("parameterization produced " + observed.str() + " points, expected " + expected.str()),
      observed_(std::move(observed)),
      expected_(std::move(expected)) {}

}  // namespace graphcodes
