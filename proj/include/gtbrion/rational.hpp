#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gtbrion {

/// Arbitrary-precision rational; GMP keeps it canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation hit a zero where a nonzero value was required.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// An invariant that the mathematics guarantees was violated.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw EvaluationError("rational with zero denominator");
    Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto strip = [](std::string& v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '+')) v.erase(v.begin());
        while (!v.empty() && v.back() == ' ') v.pop_back();
    };
    strip(s);
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    strip(num);
    strip(den);
    auto valid = [](const std::string& v) {
        if (v.empty()) return false;
        std::size_t start = v[0] == '-' ? 1 : 0;
        if (start == v.size()) return false;
        for (std::size_t i = start; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    if (!valid(num) || !valid(den)) throw Error("malformed rational literal '" + std::string(text) + "'");
    Integer p(num, 10), d(den, 10);
    if (d == 0) throw EvaluationError("rational literal with zero denominator");
    Rational q(p, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// q^e for any integer e; zero to a negative power is an evaluation error.
inline Rational power(const Rational& q, long long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw EvaluationError("zero raised to a negative power");
        return Rational(0);
    }
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
    Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

}  // namespace gtbrion
