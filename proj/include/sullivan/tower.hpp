#pragma once

#include "sullivan/algebraic_real.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sullivan {

// Scalar extension tower Q(r1)(r2) used when generator changes of basis
// need radicals or a cubic root. Level-1 elements are polynomial residues
// mod m1 (monic, irreducible over Q, degree 1..3); level-2 elements are
// residues in t mod m2, a monic polynomial with level-1 coefficients
// (degree 1..3, not necessarily irreducible - quotient ring arithmetic is
// still sound for verifying that expressions vanish at the chosen root).
// Degree-1 levels are how "no extension" is spelled.
class ScalarTower;
using TowerPtr = std::shared_ptr<const ScalarTower>;

using K1Elem = std::vector<Rational>;  // size = deg m1

class ScalarTower : public std::enable_shared_from_this<ScalarTower> {
public:
    static TowerPtr rationals();
    // Q(sqrt(q)) / Q(cbrt(q)); collapses to the trivial tower when the root
    // is rational.
    static TowerPtr with_sqrt(const Rational& q);
    static TowerPtr with_cbrt(const Rational& q);
    // Q(r) for the root described by `r` (minimal polynomial irreducible).
    static TowerPtr with_root(const AlgebraicReal& r);
    // Extend this tower by a root r2 of the monic level-1-coefficient
    // polynomial m2 (the AlgebraicReal describes which real root).
    TowerPtr extended(std::vector<K1Elem> m2_monic, AlgebraicReal r2_descriptor) const;

    int deg1() const { return m1_.degree(); }
    int deg2() const { return (int)m2_.size() - 1; }
    const UniPoly& m1() const { return m1_; }
    const std::vector<K1Elem>& m2() const { return m2_; }
    const AlgebraicReal& r1() const { return r1_; }
    const AlgebraicReal& r2() const { return r2_; }
    bool is_trivial() const { return deg1() == 1 && deg2() == 1; }

    // ---- level-1 (field) arithmetic ----
    K1Elem k1_zero() const { return K1Elem(deg1()); }
    K1Elem k1_from(const Rational& r) const;
    K1Elem k1_gen() const;  // r1 as an element
    K1Elem k1_add(const K1Elem& a, const K1Elem& b) const;
    K1Elem k1_sub(const K1Elem& a, const K1Elem& b) const;
    K1Elem k1_neg(const K1Elem& a) const;
    K1Elem k1_mul(const K1Elem& a, const K1Elem& b) const;
    K1Elem k1_scale(const K1Elem& a, const Rational& s) const;
    K1Elem k1_inv(const K1Elem& a) const;   // degree <= 2 only
    K1Elem k1_conj(const K1Elem& a) const;  // degree <= 2 only
    bool k1_is_zero(const K1Elem& a) const;
    bool k1_is_rational(const K1Elem& a) const;
    int k1_sign(const K1Elem& a) const;  // exact, via interval refinement
    std::string k1_str(const K1Elem& a) const;

private:
    UniPoly m1_;
    std::vector<K1Elem> m2_;  // monic in t; m2_[j] = coefficient of t^j
    AlgebraicReal r1_, r2_;
    friend class TowerElem;
};

// An element of the full tower: coefficient c[j][i] of r1^i r2^j. Carries
// a pointer to its tower so ring operators are self-contained.
class TowerElem {
public:
    TowerElem() = default;
    TowerElem(TowerPtr tower, std::vector<K1Elem> coeffs);
    static TowerElem from_rational(const TowerPtr& tower, const Rational& r);
    static TowerElem from_k1(const TowerPtr& tower, const K1Elem& a);
    static TowerElem r1(const TowerPtr& tower);
    static TowerElem r2(const TowerPtr& tower);

    const TowerPtr& tower() const { return tower_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;
    K1Elem k1_value() const;  // requires no genuine r2 component

    TowerElem operator-() const;
    friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
    TowerElem operator*(const Rational& s) const;
    TowerElem& operator+=(const TowerElem& o) { *this = *this + o; return *this; }
    bool operator==(const TowerElem& o) const;

    std::string str() const;  // in terms of "r1"/"r2"

private:
    void reduce();  // mod m2 then mod m1, then trim
    TowerPtr tower_;
    std::vector<K1Elem> c_;  // size deg2; each entry size deg1
};

}  // namespace sullivan
