#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace minfill {

/// Arbitrary-precision rational. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "12", "-3", "1.25", "2.5e-3" or "7/2" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical string: "7", "-3/2". Integers carry no denominator.
std::string to_string(const Rational& value);

}  // namespace minfill
