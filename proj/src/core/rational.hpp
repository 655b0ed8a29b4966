#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace csforge {

// Exact arithmetic throughout: arbitrary-precision integers and rationals.
// mpq_class keeps values reduced with positive denominator, which is exactly
// the canonical form the serializers rely on.
using Int = mpz_class;
using Rational = mpq_class;

/// "p/q" with the "/q" omitted for integers; matches mpq_class get_str().
inline std::string toString(const Rational& r) { return r.get_str(); }

/// num/den in canonical form. The raw mpq_class(num, den) constructor does
/// NOT reduce or normalize the sign, and un-canonical rationals corrupt
/// later arithmetic — always build quotients through here.
inline Rational ratio(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p" or "p/q" (base 10). Throws std::invalid_argument on garbage
/// or a zero denominator.
inline Rational rationalFromString(std::string_view s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

inline int signOf(const Rational& r) { return sgn(r); }

} // namespace csforge
