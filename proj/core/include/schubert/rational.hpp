#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace schubert {

/// Arbitrary-precision rational. All arithmetic in the engine is exact.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// "num/den" text, always with an explicit denominator ("3/1", "-1/2").
std::string to_fraction_text(const Rational& q);

/// Bare integer when the value is integral, "num/den" otherwise.
std::string to_compact_text(const Rational& q);

/// Accepts "n" or "n/d" (d nonzero); the result is canonical.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Throws ErrorKind::NonIntegral when q is not an integer that fits in 64 bits.
std::int64_t to_int64(const Rational& q, std::string_view context = {});

} // namespace schubert
