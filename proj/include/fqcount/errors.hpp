#pragma once

#include <stdexcept>
#include <string>

namespace fqcount {

// Thrown when an enumeration or group construction would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exactness certificate fails (a character sum that must be a rational
// integer is not, a division that must be exact is not, ...). Always a bug, never input.
class ExactnessError : public std::logic_error {
public:
    explicit ExactnessError(const std::string& what) : std::logic_error(what) {}
};

} // namespace fqcount
