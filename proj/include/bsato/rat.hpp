#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace bsato {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; the canonical zero is 0/1 (gmp maintains this).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Serializes as "p" or "p/q" with q > 1. Round-trips through parse_rat.
std::string rat_to_string(const Rat& r);

/// Accepts "p" and "p/q" with optional leading '-'. Returns nothing on
/// malformed input or zero denominator.
std::optional<Rat> parse_rat(const std::string& text);

/// Largest integer <= r.
Int rat_floor(const Rat& r);

}  // namespace bsato
