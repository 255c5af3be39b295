#ifndef RSMZV_RATIONAL_HPP
#define RSMZV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rsmzv {

using Rational = mpq_class;

// "p/q" or "p"; always canonicalized. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational factorial(int n);

}  // namespace rsmzv

#endif
