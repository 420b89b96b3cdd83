#ifndef MCINV_ERROR_HPP
#define MCINV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mcinv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration exceeds its configured state budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace mcinv

#endif  // MCINV_ERROR_HPP
