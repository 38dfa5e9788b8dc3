#pragma once

#include "sullivan/unipoly.hpp"

#include <optional>
#include <string>

namespace sullivan {

// A real algebraic number: a squarefree rational polynomial together with
// an isolating interval holding exactly one of its real roots. Rational
// values collapse to a linear polynomial and a point interval.
class AlgebraicReal {
public:
    AlgebraicReal() : AlgebraicReal(Rational(0)) {}
    explicit AlgebraicReal(const Rational& r);

    // poly must be squarefree with exactly one root in iv and non-root
    // endpoints; validated.
    AlgebraicReal(UniPoly poly, Interval iv);

    // Principal n-th roots of a rational (n = 2 requires q >= 0).
    static AlgebraicReal nth_root(const Rational& q, int n);

    const UniPoly& minimal_poly() const { return poly_; }
    const Interval& isolating_interval() const { return iv_; }

    bool is_rational() const { return poly_.degree() == 1; }
    Rational rational_value() const;  // requires is_rational()

    // Same number, interval width <= width. Monotone: result interval is
    // contained in the current one. May collapse to an exact rational.
    AlgebraicReal refined(const Rational& width) const;

    int sign() const;
    int compare_rational(const Rational& q) const;  // sign of (*this - q)
    static int compare(const AlgebraicReal& a, const AlgebraicReal& b);
    bool equals(const AlgebraicReal& o) const { return compare(*this, o) == 0; }

    AlgebraicReal negated() const;
    AlgebraicReal plus_rational(const Rational& s) const;
    AlgebraicReal times_rational(const Rational& s) const;

    // Resultant-based arithmetic; results are simplified to rationals when
    // the value turns out rational.
    static AlgebraicReal add(const AlgebraicReal& a, const AlgebraicReal& b);
    static AlgebraicReal mul(const AlgebraicReal& a, const AlgebraicReal& b);

    std::string str(const std::string& var = "x") const;

private:
    void simplify();  // detect rational values, collapse representation
    UniPoly poly_;
    Interval iv_;
};

}  // namespace sullivan
