#include "tfold/rational.hpp"

#include <ostream>
#include <utility>

#include "tfold/errors.hpp"

namespace tfold {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DataError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num_part = text;
    std::string_view den_part;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
        if (den_part.find('/') != std::string_view::npos)
            throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    bool negative = !num_part.empty() && num_part.front() == '-';
    if (negative) num_part.remove_prefix(1);
    if (!is_digits(num_part) || (!den_part.empty() && !is_digits(den_part)) ||
        (den_part.empty() && text.find('/') != std::string_view::npos))
        throw ParseError("malformed rational '" + std::string(text) + "'");

    Int num{std::string(num_part)};
    if (negative) num = -num;
    if (den_part.empty()) return Rational(std::move(num));
    Int den{std::string(den_part)};
    if (den == 0) throw ParseError("rational with zero denominator '" + std::string(text) + "'");
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    std::string out = num_.str();
    if (den_ != 1) out += "/" + den_.str();
    return out;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DataError("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Int floor_int(const Rational& x) {
    Int q = x.num() / x.den();  // truncates toward zero
    if (x.num() < 0 && q * x.den() != x.num()) --q;
    return q;
}

Int ceil_int(const Rational& x) {
    Int q = x.num() / x.den();
    if (x.num() > 0 && q * x.den() != x.num()) ++q;
    return q;
}

Int ceil_strict(const Rational& x) { return floor_int(x) + 1; }

Int isqrt(const Int& x) {
    if (x < 0) throw DataError("integer square root of negative value");
    Int n = boost::multiprecision::sqrt(x);  // floor square root
    while (n * n > x) --n;
    while ((n + 1) * (n + 1) <= x) ++n;
    return n;
}

Int floor_sqrt(const Rational& x) {
    if (x.sign() < 0) throw DataError("floor_sqrt of negative value");
    Int n = isqrt(x.num() / x.den());
    while ((n + 1) * (n + 1) * x.den() <= x.num()) ++n;
    while (n > 0 && n * n * x.den() > x.num()) --n;
    return n;
}

}  // namespace tfold
