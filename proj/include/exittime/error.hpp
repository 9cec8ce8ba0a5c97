#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exittime {

enum class ErrorKind {
    InvalidArgument,
    DomainError,
    Divergent,
    ToleranceUnreachable,
    DegenerateMap,
    BasePointOutside,
    UnsupportedParameter,
    StartOutsideDomain,
    IneligibleDomain,
    MissingDerivative,
    UnknownDomain,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Thrown when a series cannot be certified to the requested tolerance within
/// its term budget. Carries what was computed so callers can still report it.
class ToleranceUnreachable : public Error {
  public:
    ToleranceUnreachable(const std::string& what, double partial_sum,
                         std::size_t budget)
        : Error(ErrorKind::ToleranceUnreachable, what),
          partial_sum_(partial_sum), budget_(budget) {}

    double partial_sum() const noexcept { return partial_sum_; }
    std::size_t budget() const noexcept { return budget_; }

  private:
    double partial_sum_;
    std::size_t budget_;
};

}  // namespace exittime
