#pragma once

#include <stdexcept>
#include <string>

namespace itab {

// Thrown when a requested ground set exceeds the configured element cap.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace itab
