#include "brokenstick/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace brokenstick {

Rat::Rat(BigInt num, BigInt den) {
    if (den.is_zero()) {
        throw std::domain_error("Rat: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!is_integer_token(num_part)) {
        throw std::invalid_argument("Rat: cannot parse \"" + std::string(text) + "\"");
    }
    if (slash == std::string_view::npos) {
        return Rat(BigInt(std::string(num_part)), BigInt(1));
    }
    std::string_view den_part = text.substr(slash + 1);
    if (!is_integer_token(den_part)) {
        throw std::invalid_argument("Rat: cannot parse \"" + std::string(text) + "\"");
    }
    return Rat(BigInt(std::string(num_part)), BigInt(std::string(den_part)));
}

Rat Rat::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::string Rat::str() const {
    std::string s = numerator().str();
    BigInt den = denominator();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rat: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Rat pow(const Rat& base, int exp) {
    if (exp < 0) {
        if (base.is_zero()) {
            throw std::domain_error("Rat: 0 to a negative power");
        }
        return Rat(1) / pow(base, -exp);
    }
    Rat result(1);
    Rat b = base;
    for (unsigned e = static_cast<unsigned>(exp); e != 0; e >>= 1) {
        if (e & 1u) {
            result *= b;
        }
        if (e > 1) {
            b *= b;
        }
    }
    return result;
}

}  // namespace brokenstick
