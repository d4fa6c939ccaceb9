#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace tfold {

// Arbitrary-precision integer. Everything downstream (plurigenera, bounds,
// certificates) is exact; no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;

// Exact rational number. Always stored reduced with a positive denominator,
// so equality is structural and str() output is canonical.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // implicit: integers embed
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int num, Int den);  // DataError on zero denominator

    // Accepts "<int>" or "<int>/<positive-int>", where <int> is an optional
    // '-' followed by digits. No whitespace, no '+', no zero denominator.
    static Rational parse(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    std::string str() const;  // "p/q", or "p" when the value is an integer

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // DataError on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void normalize();

    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

// Exact floor: greatest integer <= x (floor(-1/2) == -1).
Int floor_int(const Rational& x);
// Exact ceiling: least integer >= x.
Int ceil_int(const Rational& x);
// Least integer STRICTLY greater than x; equals floor(x) + 1 for every x.
Int ceil_strict(const Rational& x);

// Greatest n >= 0 with n * n <= x. DataError on negative input.
Int isqrt(const Int& x);
Int floor_sqrt(const Rational& x);

}  // namespace tfold
