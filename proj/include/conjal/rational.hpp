#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace conjal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept in canonical form: positive
/// denominator, gcd(|num|, den) = 1. Backed by arbitrary-precision integers,
/// so arithmetic never overflows or rounds.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int v) : value_(v) {}
    Rational(long long v) : value_(v) {}
    Rational(const BigInt& v) : value_(v) {}

    /// num/den, reduced. Throws std::invalid_argument if den == 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses `p` or `p/q` with optional leading `-`, no whitespace.
    /// Throws std::invalid_argument on malformed text or zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    /// Canonical text form: `p` when the denominator is 1, else `p/q`.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    boost::multiprecision::cpp_rational value_;
};

/// Same as Rational::parse.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace conjal
