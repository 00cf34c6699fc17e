#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace opforge {

/// Exact rational number used for every interval endpoint and affine coefficient.
using Rational = boost::multiprecision::cpp_rational;

/// Base class of all errors raised by the library.
class OperadError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// "p/q" or "p" when the denominator is one. Always in lowest terms.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws OperadError on a zero denominator or junk.
Rational parse_rational(std::string_view text);

}  // namespace opforge
