#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cospec {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. All spectral identities in this library are exact, so no
// floating point appears anywhere.
using Rational = boost::multiprecision::cpp_rational;

// Raised for malformed external data: hypergraph files, partition JSON,
// rational literals. Internal contract violations use std::invalid_argument.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

namespace detail {

inline bool integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace detail

// Accepts "p" or "p/q" in base 10; sign allowed on p only, q must be > 0.
inline Rational parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    const std::string_view num_part =
        slash == std::string_view::npos ? text : text.substr(0, slash);
    if (!detail::integer_token(num_part)) {
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    }
    Integer num{std::string(num_part)};
    if (slash == std::string_view::npos) return Rational(num);

    const std::string_view den_part = text.substr(slash + 1);
    if (!detail::integer_token(den_part) || den_part[0] == '-') {
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
    }
    Integer den{std::string(den_part)};
    if (den.is_zero()) {
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

// Lowest-terms rendering: "p/q", or plain "p" when q == 1.
inline std::string rational_str(const Rational& value) {
    std::string s = boost::multiprecision::numerator(value).str();
    const Integer den = boost::multiprecision::denominator(value);
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

}  // namespace cospec
