#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace szeged {

/// Exact rational number; always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// Decimal approximation with 12 significant digits, trailing zeros dropped.
std::string format_decimal(const Rational& value);

}  // namespace szeged
