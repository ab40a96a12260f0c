/**
 * Exact rational arithmetic used throughout the library.
 *
 * All combinatorial and linear-algebra results (Euler characteristics,
 * curvatures, LP solutions, polytope dimensions) are computed over
 * arbitrary-precision rationals; floating point appears only in the
 * Monte-Carlo and variance-minimization routines.
 */

#ifndef CURV_RATIONAL_HPP
#define CURV_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace curv {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Serialize as "num/den" in lowest terms, denominator always explicit.
inline std::string to_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parse "num/den" or a bare integer "num".
inline Rational parse_rational(const std::string& text)
{
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            throw ParseError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational: \"" + text + "\"");
    }
}

/// Binomial coefficient C(n, k) as an exact integer.
inline Integer binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Integer result = 1;
    for (int i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

} // namespace curv

#endif
