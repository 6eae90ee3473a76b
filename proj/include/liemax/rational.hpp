#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace liemax {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Always "p/q", even for integers. Used by the certification reports.
std::string to_fraction_string(const Rational& q);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// The rational square root of q when it exists.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Value when the integer fits in int64.
std::optional<std::int64_t> to_int64(const mpz_class& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace liemax
