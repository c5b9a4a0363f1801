#include "conjal/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace conjal {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::invalid_argument("rational: zero denominator");
    }
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    std::string_view num_part = rest;
    std::string_view den_part{};
    bool has_den = false;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
        throw std::invalid_argument("rational: malformed literal '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_part));
    BigInt den = has_den ? BigInt(std::string(den_part)) : BigInt(1);
    if (den == 0) {
        throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

Rational parse_rational(std::string_view text) {
    return Rational::parse(text);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace conjal
