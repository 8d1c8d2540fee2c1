#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ssbchoice {

using Rational = mpq_class;

/// Parses "p/q", "p" or a decimal such as "0.25" / "-1.5" into a canonical
/// rational. Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest terms with a positive denominator; integers print without "/1".
std::string to_string(const Rational& value);

/// Percentage with one decimal, rounded half up (e.g. 4/15 -> "26.7").
std::string to_percent(const Rational& fraction);

int sign(const Rational& value);

Rational sum(const std::vector<Rational>& values);

}  // namespace ssbchoice
