#include "sullivan/graded.hpp"

#include <doctest.h>

#include <random>

using namespace sullivan;

TEST_CASE("koszul signs on odd generators") {
    // v declared before u, both odd of degree 3.
    FreeGCA A({{"v", 3}, {"u", 3}});
    Monomial u = Monomial::power(1, 1), v = Monomial::power(0, 1);

    auto [sign, prod] = A.mul_monomials(u, v);  // u*v reorders to v*u
    CHECK(sign == -1);
    CHECK(prod == Monomial({{0, 1}, {1, 1}}));

    auto [sign2, prod2] = A.mul_monomials(u, u);
    CHECK(sign2 == 0);

    FreeGCA B({{"x", 2}});
    auto [sign3, prod3] = B.mul_monomials(Monomial::power(0, 2), Monomial::power(0, 1));
    CHECK(sign3 == 1);
    CHECK(prod3 == Monomial::power(0, 3));
}

TEST_CASE("graded commutativity sign rule") {
    FreeGCA A({{"x", 2}, {"u", 3}, {"v", 5}, {"y", 4}});
    std::mt19937_64 rng(5);
    auto random_monomial = [&]() {
        std::vector<std::pair<int, int>> f;
        for (int g = 0; g < A.size(); ++g) {
            int max_e = A.odd(g) ? 1 : 2;
            int e = (int)(rng() % (max_e + 1));
            if (e > 0) f.emplace_back(g, e);
        }
        return Monomial(f);
    };
    for (int iter = 0; iter < 200; ++iter) {
        Monomial m1 = random_monomial(), m2 = random_monomial();
        auto [s12, p12] = A.mul_monomials(m1, m2);
        auto [s21, p21] = A.mul_monomials(m2, m1);
        if (s12 == 0) {
            CHECK(s21 == 0);
            continue;
        }
        CHECK(p12 == p21);
        int d1 = A.degree(m1), d2 = A.degree(m2);
        int expect = (d1 % 2 == 1 && d2 % 2 == 1) ? -1 : 1;
        CHECK(s12 * s21 == expect * 1);
        CHECK(s12 == ((d1 % 2 && d2 % 2) ? -s21 : s21));
    }
}

TEST_CASE("free multiplication is associative") {
    FreeGCA A({{"x", 2}, {"u", 3}, {"v", 3}});
    std::mt19937_64 rng(9);
    auto random_poly = [&]() {
        GradedPoly p;
        for (int t = 0; t < 3; ++t) {
            std::vector<std::pair<int, int>> f;
            for (int g = 0; g < A.size(); ++g) {
                int max_e = A.odd(g) ? 1 : 3;
                int e = (int)(rng() % (max_e + 1));
                if (e > 0) f.emplace_back(g, e);
            }
            p.add_term(Monomial(f), Rational((long)(rng() % 7) - 3));
        }
        return p;
    };
    for (int iter = 0; iter < 100; ++iter) {
        GradedPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c)));
    }
}

TEST_CASE("monomial enumeration counts") {
    FreeGCA A({{"x", 2}, {"y", 2}});
    CHECK(A.monomials_of_degree(0).size() == 1);
    CHECK(A.monomials_of_degree(1).empty());
    CHECK(A.monomials_of_degree(4).size() == 3);
    CHECK(A.monomials_of_degree(6).size() == 4);

    // Column order: generator powers first, then mixed monomials.
    auto deg4 = A.monomials_of_degree(4);
    CHECK(A.monomial_str(deg4[0]) == "x^2");
    CHECK(A.monomial_str(deg4[1]) == "y^2");
    CHECK(A.monomial_str(deg4[2]) == "x*y");

    FreeGCA B({{"x", 2}, {"u", 3}});
    CHECK(B.monomials_of_degree(5).size() == 1);   // x*u
    CHECK(B.monomials_of_degree(7).size() == 1);   // x^2 u
    CHECK(B.monomials_of_degree(3).size() == 1);   // u
    CHECK(B.monomials_of_degree(6).size() == 1);   // x^3 (u^2 dies)
}

TEST_CASE("presentation validation") {
    Presentation p;
    p.algebra = FreeGCA({{"x", 2}});
    GradedPoly bad = GradedPoly::term(Monomial::power(0, 2), Rational(1));
    bad.add_term(Monomial::power(0, 1), Rational(1));
    p.relations = {bad};
    CHECK_THROWS_AS(p.validate(), MalformedPresentation);

    p.relations = {GradedPoly()};
    CHECK_THROWS_AS(p.validate(), MalformedPresentation);

    p.relations = {GradedPoly::term(Monomial::power(0, 2), Rational(1))};
    CHECK_NOTHROW(p.validate());
    CHECK(p.default_cap() == 8);
    p.formal_dimension = 6;
    CHECK(p.default_cap() == 6);
}
