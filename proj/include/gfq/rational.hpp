#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace gfq {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
inline std::string rational_str(const Rational& r) {
    return r.str();
}

inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

}  // namespace gfq
