#include "sullivan/biquotient.hpp"

#include <doctest.h>

#include <random>

using namespace sullivan;

namespace {

ActionMatrix mat(std::array<std::int64_t, 9> v) {
    ActionMatrix m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.e[r][c] = v[r * 3 + c];
    return m;
}

// Permutation-expansion determinant, independent of the production path.
long long det_oracle(const ActionMatrix& m) {
    long long d = 0;
    int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    int signs[6] = {1, 1, 1, -1, -1, -1};
    for (int p = 0; p < 6; ++p) {
        long long term = signs[p];
        for (int r = 0; r < 3; ++r) term *= m.at(r, perms[p][r]);
        d += term;
    }
    return d;
}

}  // namespace

TEST_CASE("the three displayed families are free") {
    for (std::int64_t a = -10; a <= 10; ++a)
        for (std::int64_t b = -10; b <= 10; ++b) {
            auto r1 = freeness_check(mat({1, 2, 0, 1, 1, 0, a, b, 1}));
            CHECK(r1.free);
            CHECK(r1.minor_values[0] == -1);
            CHECK(r1.minor_values[1] == 1);
            CHECK(r1.minor_values[2] == 1);
            CHECK(r1.det_value == -1);

            auto r2 = freeness_check(mat({1, 2, a, 1, 1, b, 0, 0, 1}));
            CHECK(r2.free);
            CHECK(r2.det_value == -1);
        }
    auto r3 = freeness_check(mat({1, 0, 0, 5, 1, 0, 7, -3, 1}));
    CHECK(r3.free);
    CHECK(r3.minor_values == std::array<BigInt, 3>{1, 1, 1});
    CHECK(r3.det_value == 1);
}

TEST_CASE("freeness violations are rejected") {
    auto rep = freeness_check(mat({1, 2, 0, 2, 1, 0, 0, 0, 1}));
    CHECK_FALSE(rep.free);
    CHECK(rep.minor_values[0] == -3);

    CHECK_FALSE(freeness_check(mat({2, 0, 0, 0, 1, 0, 0, 0, 1})).free);  // diagonal
    CHECK_FALSE(freeness_check(mat({1, 0, 0, 0, 1, 3, 0, 2, 1})).free);  // minor {2,3}
}

TEST_CASE("random matrices agree with the determinant oracle") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::int64_t> entry(-6, 6);
    for (int iter = 0; iter < 300; ++iter) {
        ActionMatrix m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.e[r][c] = entry(rng);
        auto rep = freeness_check(m);
        CHECK(rep.det_value == BigInt(det_oracle(m)));
        bool diag = (m.at(0, 0) == 1 || m.at(0, 0) == -1) &&
                    (m.at(1, 1) == 1 || m.at(1, 1) == -1) &&
                    (m.at(2, 2) == 1 || m.at(2, 2) == -1);
        bool minors_unit = true;
        long long m01 = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        long long m02 = m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0);
        long long m12 = m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
        for (long long v : {m01, m02, m12}) minors_unit &= (v == 1 || v == -1);
        long long dd = det_oracle(m);
        CHECK(rep.free == (diag && minors_unit && (dd == 1 || dd == -1)));
    }
}

TEST_CASE("family-3 presentations") {
    Family3Ring triv = family3_ring(0, 0, 0);
    CHECK(triv.ring->hilbert_coefficients() == std::vector<long>{1, 0, 3, 0, 3, 0, 1});

    Family3Ring f = family3_ring(2, 1, 1);
    // x2^2 = -2 x1 x2 and x3^2 = -x1 x3 - x2 x3
    GradedPoly x2 = f.ring->generator_class(1);
    GradedPoly x3 = f.ring->generator_class(2);
    GradedPoly x1 = f.ring->generator_class(0);
    CHECK(f.ring->multiply(x2, x2) == f.ring->multiply(x1, x2).scaled(Rational(-2)));
    CHECK(f.ring->multiply(x3, x3) ==
          (f.ring->multiply(x1, x3) + f.ring->multiply(x2, x3)).scaled(Rational(-1)));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> entry(-4, 4);
    for (int iter = 0; iter < 20; ++iter) {
        Family3Ring g = family3_ring(entry(rng), entry(rng), entry(rng));
        CHECK(poincare_pairing_check(*g.ring, 6));
    }
}

TEST_CASE("formality obstruction reference values") {
    auto r1 = formality_obstruction(family3_ring(0, 1, 2));
    CHECK(r1.coefficient == Rational(1));
    CHECK(r1.top_class_nonzero);
    CHECK(r1.verdict == ObstructionVerdict::Obstructed);

    auto r2 = formality_obstruction(family3_ring(0, 0, 0));
    CHECK(r2.coefficient.is_zero());
    CHECK(r2.verdict == ObstructionVerdict::Inconclusive);

    auto r3 = formality_obstruction(family3_ring(2, 1, 1));
    CHECK(r3.coefficient.is_zero());
    CHECK(r3.verdict == ObstructionVerdict::Inconclusive);
}

TEST_CASE("obstruction identities on a small grid") {
    for (std::int64_t b1 = -2; b1 <= 2; ++b1)
        for (std::int64_t c1 = -2; c1 <= 2; ++c1)
            for (std::int64_t c2 = -2; c2 <= 2; ++c2) {
                Family3Ring f = family3_ring(b1, c1, c2);
                auto rep = formality_obstruction(f);  // throws on identity failure
                Rational expect = -(Rational(c2) / Rational(2)) *
                                  (Rational(b1) * Rational(c2) / Rational(2) - Rational(c1));
                CHECK(rep.coefficient == expect);
                bool obstructed = !expect.is_zero() && rep.top_class_nonzero;
                CHECK((rep.verdict == ObstructionVerdict::Obstructed) == obstructed);
                // degenerate parameters stay inconclusive
                if (c2 == 0 || b1 * c2 == 2 * c1)
                    CHECK(rep.verdict == ObstructionVerdict::Inconclusive);
            }
}
