#pragma once

#include <stdexcept>
#include <string>

namespace siggb {

/// Operands built over rings with different variable counts.
class dimension_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exponent left the 16-bit range.
class overflow_error : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// Thrown by monomial_quotient when the divisor does not divide.
class not_divisible_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Mixed fields, mixed term orders, or an operation invoked under the wrong
/// module order.
class config_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Bad caller input: empty generator list, zero generator, index out of range.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace siggb
