#pragma once
#include <stdexcept>
#include <string>

namespace bts {

// Error taxonomy mirrors the process exit codes: 1 domain, 2 usage, 3 budget.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bts
