#pragma once

#include "sullivan/quotient.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>

namespace sullivan {

// Integer matrix parametrizing a torus action on a product of three
// 3-spheres; rows (a1 a2 a3 / b1 b2 b3 / c1 c2 c3).
struct ActionMatrix {
    std::array<std::array<std::int64_t, 3>, 3> e{};

    std::int64_t at(int r, int c) const { return e[r][c]; }
};

// Freeness is equivalent to unit diagonal entries, unit principal 2x2
// minors, and unit determinant.
struct FreenessReport {
    bool diagonal_ok = false;
    std::array<BigInt, 3> minor_values{};  // index pairs {1,2}, {1,3}, {2,3}
    BigInt det_value;
    bool free = false;
};

FreenessReport freeness_check(const ActionMatrix& m);

// The lower-triangular family: cohomology ring Z[x1,x2,x3] with
// x1^2 = 0, x2^2 = -b1 x1 x2, x3^2 = -c1 x1 x3 - c2 x2 x3 (rational
// coefficients here; torsion plays no role in these statements).
struct Family3Ring {
    std::int64_t b1 = 0, c1 = 0, c2 = 0;
    Presentation presentation;
    std::shared_ptr<QuotientAlgebra> ring;  // built to degree 6
};

Family3Ring family3_ring(std::int64_t b1, std::int64_t c1, std::int64_t c2);

enum class ObstructionVerdict { Obstructed, Inconclusive };

// The completed-square harmonic-form computation: w2t = w2 + (b1/2) w1
// squares to zero; w3t = w3 + p w1 + q w2t has
// w3t^2 = coefficient * w1 w2t with coefficient = -(c2/2)(b1 c2/2 - c1).
// Obstructed when the coefficient and the top class are both nonzero.
struct ObstructionReport {
    GradedPoly omega2_tilde;
    GradedPoly omega3_tilde;
    Rational p, q;
    Rational coefficient;
    bool top_class_nonzero = false;
    ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;
};

ObstructionReport formality_obstruction(const Family3Ring& r);

const char* to_string(ObstructionVerdict v);

}  // namespace sullivan
