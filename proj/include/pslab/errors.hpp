#pragma once

#include <stdexcept>
#include <string>

namespace pslab {

// A caller violated an operation's precondition (bad prime, J not inside I(theta), ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what)
{
    if (!cond) throw PreconditionError(what);
}

inline void require_budget(bool cond, const std::string& what)
{
    if (!cond) throw BudgetExceeded(what);
}

} // namespace pslab
