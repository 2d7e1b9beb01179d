#pragma once

#include <stdexcept>
#include <string>

namespace brokenstick {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the supported domain (e.g. k < 3 or k > n).
class InvalidDomain : public Error {
public:
  using Error::Error;
};

/// A subset enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A Monte Carlo run was requested with zero trials.
class ZeroTrials : public Error {
public:
  using Error::Error;
};

/// Throws InvalidDomain unless 3 <= k <= n.
void require_polygon_domain(int k, int n);

} // namespace brokenstick
