#pragma once

#include "sullivan/model.hpp"
#include "sullivan/quotient.hpp"
#include "sullivan/tower.hpp"

#include <optional>
#include <string>

namespace sullivan {

struct EllipticProfile {
    int dimension = 0;
    RankTable ranks;
};

// Both homotopy-rank bounds for a rationally elliptic space of dimension n:
// sum 2k rk(pi_2k) <= n and sum (2k+1) rk(pi_2k+1) <= 2n - 1.
bool check_elliptic_inequalities(const EllipticProfile& p);

enum class VerdictTag {
    CohomologySphere,
    ProductS2S3,
    ProductS2S4,
    ProductS3S3,
    ComplexProjective3,
    S2xCP2,
    NotGeometricallyFormal_b2_2,
    RankProfileS2S2S2,
    Impossible,
};

const char* to_string(VerdictTag tag);

struct Verdict {
    VerdictTag tag;
    std::string detail;
};

// rk pi_3 of a five-manifold ring with second Betti number b2.
inline int dim5_rank_pi3(int b2) { return b2 + b2 * (b2 + 1) / 2; }

Verdict classify_dim5(int b2);

// Requires the six-dimensional Poincare pairing and simple connectivity;
// throws DualityViolation otherwise.
Verdict classify_dim6(const QuotientAlgebra& q);

// A real degree-2 class with square zero, when one exists: s*x + t*y over
// the scalar tower (one of s, t is 1).
struct SquareZeroClass {
    TowerPtr tower;
    TowerElem s, t;
    ExtGradedPoly cls;
};

std::optional<SquareZeroClass> find_square_zero_class(const QuotientAlgebra& q);

// Degree-2 generators with xbar^2 + eps*ybar^2 = 0 and ybar^3 = 0 over a
// radical extension, for b2 = 2 rings without a square-zero class.
struct NormalizedPair {
    TowerPtr tower;
    ExtGradedPoly xbar, ybar;
    int epsilon = 1;
    // Products whose reduction in the (extended-scalar) quotient is zero.
    ExtGradedPoly witness_degree4;  // xbar^2 + eps*ybar^2
    ExtGradedPoly witness_degree6;  // ybar^3
};

NormalizedPair normalize_generators(const QuotientAlgebra& q);

struct CubicInstance {
    Rational alpha;
    UniPoly polynomial;  // 1 - 3a^2 + alpha*(a^3 - 3a)
    AlgebraicReal chosen_root;
};

CubicInstance cubic_root(const Rational& alpha);

}  // namespace sullivan
