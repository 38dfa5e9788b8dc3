#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace sullivan {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored reduced with positive denominator;
// boost's cpp_rational maintains that canonical form for us.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(int n) : v_(n) {}   // NOLINT
    Rational(const BigInt& n) : v_(n) {}
    // Sign-normalizing: the backend requires a positive denominator.
    Rational(const BigInt& num, const BigInt& den)
        : v_(den < 0 ? -num : num, den < 0 ? BigInt(-den) : den) {}
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_string(const std::string& s);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }
    Rational inverse() const;

    // Truncated integer parts, used by interval bisection and the
    // simplest-rational search.
    BigInt floor() const;
    BigInt ceil() const;

    // True iff the value is the square of a rational; *root gets the
    // nonnegative square root when so.
    bool is_perfect_square(Rational* root = nullptr) const;
    // Same for cubes (sign carried through).
    bool is_perfect_cube(Rational* root = nullptr) const;

    // "p/q", with "/q" omitted for integers.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

// Midpoint helper used all over interval code.
inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
}

// The unique rational of smallest denominator (then smallest numerator) in
// the closed interval [lo, hi]. Stern-Brocot descent.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace sullivan
