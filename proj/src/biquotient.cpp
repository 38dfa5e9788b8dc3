#include "sullivan/biquotient.hpp"

namespace sullivan {

namespace {

BigInt minor2(const ActionMatrix& m, int i, int j) {
    return BigInt(m.at(i, i)) * m.at(j, j) - BigInt(m.at(i, j)) * m.at(j, i);
}

BigInt det3(const ActionMatrix& m) {
    BigInt d = 0;
    d += BigInt(m.at(0, 0)) * (BigInt(m.at(1, 1)) * m.at(2, 2) - BigInt(m.at(1, 2)) * m.at(2, 1));
    d -= BigInt(m.at(0, 1)) * (BigInt(m.at(1, 0)) * m.at(2, 2) - BigInt(m.at(1, 2)) * m.at(2, 0));
    d += BigInt(m.at(0, 2)) * (BigInt(m.at(1, 0)) * m.at(2, 1) - BigInt(m.at(1, 1)) * m.at(2, 0));
    return d;
}

bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

}  // namespace

FreenessReport freeness_check(const ActionMatrix& m) {
    FreenessReport rep;
    rep.diagonal_ok = is_unit(BigInt(m.at(0, 0))) && is_unit(BigInt(m.at(1, 1))) &&
                      is_unit(BigInt(m.at(2, 2)));
    rep.minor_values = {minor2(m, 0, 1), minor2(m, 0, 2), minor2(m, 1, 2)};
    rep.det_value = det3(m);
    rep.free = rep.diagonal_ok && is_unit(rep.minor_values[0]) &&
               is_unit(rep.minor_values[1]) && is_unit(rep.minor_values[2]) &&
               is_unit(rep.det_value);
    return rep;
}

Family3Ring family3_ring(std::int64_t b1, std::int64_t c1, std::int64_t c2) {
    Family3Ring out;
    out.b1 = b1;
    out.c1 = c1;
    out.c2 = c2;

    FreeGCA A({{"x1", 2}, {"x2", 2}, {"x3", 2}});
    auto mono = [](int i, int j) { return Monomial({{i, 1}, {j, 1}}); };

    GradedPoly r1 = GradedPoly::term(Monomial::power(0, 2), Rational(1));

    GradedPoly r2 = GradedPoly::term(Monomial::power(1, 2), Rational(1));
    r2.add_term(mono(0, 1), Rational(b1));

    GradedPoly r3 = GradedPoly::term(Monomial::power(2, 2), Rational(1));
    r3.add_term(mono(0, 2), Rational(c1));
    r3.add_term(mono(1, 2), Rational(c2));

    out.presentation.algebra = A;
    out.presentation.relations = {r1, r2, r3};
    out.presentation.formal_dimension = 6;
    out.ring = std::make_shared<QuotientAlgebra>(out.presentation, 6);
    return out;
}

ObstructionReport formality_obstruction(const Family3Ring& r) {
    const QuotientAlgebra& q = *r.ring;
    ObstructionReport rep;

    GradedPoly w1 = q.generator_class(0);
    GradedPoly w2 = q.generator_class(1);
    GradedPoly w3 = q.generator_class(2);

    Rational b1(r.b1), c1(r.c1), c2(r.c2);
    Rational half(1, 2);

    GradedPoly w2t = w2 + w1.scaled(b1 * half);

    // w3^2 = A w1 w3 - c2 w2t w3 with A = b1 c2/2 - c1; the shifts
    // p = -A/2, q = c2/2 cancel both cross terms.
    Rational A = b1 * c2 * half - c1;
    rep.p = -A * half;
    rep.q = c2 * half;
    GradedPoly w3t = w3 + w1.scaled(rep.p) + w2t.scaled(rep.q);

    rep.omega2_tilde = w2t;
    rep.omega3_tilde = w3t;
    rep.coefficient = -(c2 * half) * A;

    GradedPoly w2t_sq = q.multiply(w2t, w2t);
    if (!w2t_sq.is_zero())
        throw ReductionMismatch("omega2-tilde squared does not reduce to zero");

    GradedPoly w1w2t = q.multiply(w1, w2t);
    GradedPoly w3t_sq = q.multiply(w3t, w3t);
    if (!(w3t_sq - w1w2t.scaled(rep.coefficient)).is_zero())
        throw ReductionMismatch("omega3-tilde squared misses the predicted multiple of w1*w2t");

    GradedPoly top = q.multiply(w1w2t, w3t);
    rep.top_class_nonzero = !top.is_zero();

    rep.verdict = (!rep.coefficient.is_zero() && rep.top_class_nonzero)
                      ? ObstructionVerdict::Obstructed
                      : ObstructionVerdict::Inconclusive;
    return rep;
}

const char* to_string(ObstructionVerdict v) {
    return v == ObstructionVerdict::Obstructed ? "Obstructed" : "Inconclusive";
}

}  // namespace sullivan
