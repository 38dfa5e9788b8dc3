#include "sullivan/algebraic_real.hpp"

#include <doctest.h>

using namespace sullivan;

namespace {
UniPoly poly(std::vector<long> asc) {
    std::vector<Rational> c;
    for (long v : asc) c.emplace_back(v);
    return UniPoly(std::move(c));
}
}  // namespace

TEST_CASE("refinement narrows and stays inside") {
    AlgebraicReal r(poly({-2, 0, 1}), {Rational(1), Rational(2)});
    AlgebraicReal fine = r.refined(Rational(1, 100));
    CHECK(fine.isolating_interval().width() <= Rational(1, 100));
    CHECK(fine.isolating_interval().lo >= Rational(1));
    CHECK(fine.isolating_interval().hi <= Rational(2));
    // sqrt(2) ~ 1.41421356...
    CHECK(fine.isolating_interval().lo < Rational(141422, 100000));
    CHECK(fine.isolating_interval().hi > Rational(141421, 100000));
}

TEST_CASE("rational values collapse to point intervals") {
    AlgebraicReal r(Rational(5, 3));
    CHECK(r.is_rational());
    CHECK(r.rational_value() == Rational(5, 3));
    AlgebraicReal refined = r.refined(Rational(1, 1000000));
    CHECK(refined.isolating_interval().lo == refined.isolating_interval().hi);
}

TEST_CASE("squaring sqrt(3) by resultant arithmetic gives exactly 3") {
    AlgebraicReal s3 = AlgebraicReal::nth_root(Rational(3), 2);
    CHECK_FALSE(s3.is_rational());
    AlgebraicReal sq = AlgebraicReal::mul(s3, s3);
    REQUIRE(sq.is_rational());
    CHECK(sq.rational_value() == Rational(3));
}

TEST_CASE("sum of conjugate roots is rational") {
    AlgebraicReal plus = AlgebraicReal::nth_root(Rational(2), 2);
    AlgebraicReal minus = plus.negated();
    AlgebraicReal sum = AlgebraicReal::add(plus, minus);
    REQUIRE(sum.is_rational());
    CHECK(sum.rational_value().is_zero());
}

TEST_CASE("sqrt(2) + sqrt(3) has the expected degree-4 polynomial") {
    AlgebraicReal a = AlgebraicReal::nth_root(Rational(2), 2);
    AlgebraicReal b = AlgebraicReal::nth_root(Rational(3), 2);
    AlgebraicReal s = AlgebraicReal::add(a, b);
    CHECK_FALSE(s.is_rational());
    // minimal polynomial x^4 - 10x^2 + 1
    UniPoly expect = poly({1, 0, -10, 0, 1});
    CHECK(s.minimal_poly().monic() == expect.monic());
    CHECK(s.compare_rational(Rational(3147, 1000)) < 0);
    CHECK(s.compare_rational(Rational(3146, 1000)) > 0);
}

TEST_CASE("comparisons distinguish close conjugates and detect equality") {
    AlgebraicReal a = AlgebraicReal::nth_root(Rational(2), 2);
    AlgebraicReal b = AlgebraicReal::nth_root(Rational(2), 2);
    CHECK(AlgebraicReal::compare(a, b) == 0);
    CHECK(AlgebraicReal::compare(a.negated(), b) < 0);

    AlgebraicReal c = AlgebraicReal::nth_root(Rational(201, 100), 2);
    CHECK(AlgebraicReal::compare(a, c) < 0);

    AlgebraicReal cb = AlgebraicReal::nth_root(Rational(2), 3);
    CHECK(cb.sign() > 0);
    CHECK(AlgebraicReal::compare(cb, a) < 0);

    AlgebraicReal prod = AlgebraicReal::mul(a, cb);  // 2^(5/6)
    CHECK(prod.sign() > 0);
    CHECK(prod.compare_rational(Rational(2)) < 0);
    CHECK(prod.compare_rational(Rational(17, 10)) > 0);
}

TEST_CASE("scaling and shifting keep exactness") {
    AlgebraicReal a = AlgebraicReal::nth_root(Rational(2), 2);
    AlgebraicReal scaled = a.times_rational(Rational(3, 2));
    AlgebraicReal back = scaled.times_rational(Rational(2, 3));
    CHECK(AlgebraicReal::compare(a, back) == 0);
    AlgebraicReal shifted = a.plus_rational(Rational(7)).plus_rational(Rational(-7));
    CHECK(AlgebraicReal::compare(a, shifted) == 0);
    AlgebraicReal sq = AlgebraicReal::mul(scaled, scaled);
    REQUIRE(sq.is_rational());
    CHECK(sq.rational_value() == Rational(9, 2));
}
