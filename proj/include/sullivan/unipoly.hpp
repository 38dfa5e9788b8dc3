#pragma once

#include "sullivan/rational.hpp"

#include <string>
#include <vector>

namespace sullivan {

// Dense univariate polynomial over Q, coefficients ascending by degree.
// The zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& r) { return UniPoly({r}); }
    // x - r
    static UniPoly linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return k >= 0 && k < (int)c_.size() ? c_[k] : Rational(0);
    }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    UniPoly monic() const;

    // Euclidean division; both outputs exact over Q.
    struct DivMod;
    DivMod divmod(const UniPoly& divisor) const;

    // p(x + shift), p(x * scale), p(-x), x^deg * p(1/x) style substitutions.
    UniPoly compose_shift(const Rational& shift) const;   // p(x + shift)
    UniPoly compose_scale(const Rational& scale) const;   // p(scale * x)
    UniPoly reversed() const;                             // x^deg p(1/x)

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

struct UniPoly::DivMod {
    UniPoly quot, rem;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd
UniPoly squarefree_part(const UniPoly& p);        // monic, same real roots

// Resultant of a and b via the Euclidean remainder sequence.
Rational resultant(const UniPoly& a, const UniPoly& b);

// Open isolating interval with rational endpoints, lo < hi (point intervals
// lo == hi mark an exact rational root).
struct Interval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Sturm sequence of the squarefree part; exact real-root counting.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);  // p must be squarefree
    // Number of real roots in (a, b], a < b, assuming neither is a root.
    int count_roots(const Rational& a, const Rational& b) const;
    int count_all_roots(const Rational& bound) const;

private:
    int variations_at(const Rational& x) const;
    std::vector<UniPoly> chain_;
};

// 1 + max |a_i / a_n|; every real root lies strictly inside (-B, B).
Rational cauchy_root_bound(const UniPoly& p);

// One disjoint interval per distinct real root of p (via its squarefree
// part). Interval endpoints are never roots, and the squarefree part
// changes sign across each interval. Deterministic.
std::vector<Interval> sturm_isolate(const UniPoly& p);

}  // namespace sullivan
