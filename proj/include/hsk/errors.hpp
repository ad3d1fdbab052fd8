#ifndef HSK_ERRORS_HPP
#define HSK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsk {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ZeroPochhammerInDenominator : DomainError {
    using DomainError::DomainError;
};

struct ZeroConstantTerm : DomainError {
    using DomainError::DomainError;
};

struct ConstantTermNotOne : DomainError {
    using DomainError::DomainError;
};

struct NotNormalized : DomainError {
    using DomainError::DomainError;
};

struct OrderExhausted : DomainError {
    using DomainError::DomainError;
};

struct SupportExceedsOrder : DomainError {
    using DomainError::DomainError;
};

struct ToleranceUnachievable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TailNotSummable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceFailure : std::runtime_error {
    ConvergenceFailure(const std::string &what, double best, double resid)
        : std::runtime_error(what), best_value(best), residual(resid)
    {
    }
    double best_value;
    double residual;
};

} // namespace hsk

#endif
