#include "sullivan/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace sullivan {

namespace mp = boost::multiprecision;

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(den(), num());
}

BigInt Rational::floor() const {
    BigInt q = num() / den();
    if (num() < 0 && q * den() != num()) --q;
    return q;
}

BigInt Rational::ceil() const {
    BigInt q = num() / den();
    if (num() > 0 && q * den() != num()) ++q;
    return q;
}

bool Rational::is_perfect_square(Rational* root) const {
    if (sign() < 0) return false;
    BigInt rn = mp::sqrt(num()), rd = mp::sqrt(den());
    if (rn * rn != num() || rd * rd != den()) return false;
    if (root) *root = Rational(rn, rd);
    return true;
}

namespace {
bool integer_cbrt(const BigInt& n, BigInt* out) {
    if (n == 0) { *out = 0; return true; }
    BigInt a = n < 0 ? BigInt(-n) : n;
    // Newton iteration on integers, then exact check.
    BigInt x = BigInt(1) << (unsigned)((mp::msb(a) / 3) + 1);
    while (true) {
        BigInt y = (2 * x + a / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    while (x * x * x > a) --x;
    if (x * x * x != a) return false;
    *out = n < 0 ? BigInt(-x) : x;
    return true;
}
}  // namespace

bool Rational::is_perfect_cube(Rational* root) const {
    BigInt rn, rd;
    if (!integer_cbrt(num(), &rn) || !integer_cbrt(den(), &rd)) return false;
    if (root) *root = Rational(rn, rd);
    return true;
}

std::string Rational::str() const {
    std::string s = num().str();
    if (den() != 1) s += "/" + den().str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("empty interval");
    if (lo.sign() > 0) {
        // Stern-Brocot descent. An integer in range wins outright.
        if (lo.ceil() <= hi.floor()) return Rational(lo.ceil());
        // No integer inside: both endpoints share their integer part.
        BigInt n = lo.floor();
        Rational flo = lo - Rational(n), fhi = hi - Rational(n);
        // flo > 0 here (lo integral was caught above), so inverses exist.
        Rational r = simplest_rational_in(fhi.inverse(), flo.inverse());
        return Rational(n) + r.inverse();
    }
    if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
    return Rational(0);  // interval straddles or touches zero
}

}  // namespace sullivan
