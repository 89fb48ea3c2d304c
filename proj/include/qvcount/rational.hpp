#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qvc {

using Rational = mpq_class;
using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// p/q in lowest terms. Prefer this over the two-argument mpq_class constructor, which does not reduce.
Rational frac(std::int64_t p, std::int64_t q);

/// Canonical "p/q" form; integers are printed without a denominator.
std::string to_string(const Rational& r);

RationalVector parse_rational_list(std::string_view text, char sep = ',');
IntVector parse_int_list(std::string_view text, char sep = ',');

std::string join(const IntVector& v, char sep = ',');
std::string join(const RationalVector& v, char sep = ',');

RationalVector to_rational(const IntVector& v);

bool is_integer(const Rational& r);
bool is_integral(const RationalVector& v);

Rational dot(const RationalVector& a, const IntVector& b);
std::int64_t dot(const IntVector& a, const IntVector& b);

std::int64_t gcd_of(const IntVector& v);

}  // namespace qvc
