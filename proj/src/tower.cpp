#include "sullivan/tower.hpp"

#include <sstream>
#include <stdexcept>

namespace sullivan {

namespace {
std::vector<K1Elem> trivial_m2(int deg1) {
    // m2 = t, i.e. r2 = 0: one coefficient row, no genuine second level.
    return {K1Elem(deg1), [&] { K1Elem one(deg1); one[0] = Rational(1); return one; }()};
}
}  // namespace

TowerPtr ScalarTower::rationals() {
    auto t = std::make_shared<ScalarTower>();
    t->m1_ = UniPoly({Rational(0), Rational(1)});  // x
    t->m2_ = trivial_m2(1);
    t->r1_ = AlgebraicReal(Rational(0));
    t->r2_ = AlgebraicReal(Rational(0));
    return t;
}

TowerPtr ScalarTower::with_root(const AlgebraicReal& r) {
    if (r.is_rational()) return rationals();
    auto t = std::make_shared<ScalarTower>();
    t->m1_ = r.minimal_poly().monic();
    t->m2_ = trivial_m2(t->m1_.degree());
    t->r1_ = r;
    t->r2_ = AlgebraicReal(Rational(0));
    return t;
}

TowerPtr ScalarTower::with_sqrt(const Rational& q) {
    return with_root(AlgebraicReal::nth_root(q, 2));
}

TowerPtr ScalarTower::with_cbrt(const Rational& q) {
    return with_root(AlgebraicReal::nth_root(q, 3));
}

TowerPtr ScalarTower::extended(std::vector<K1Elem> m2_monic,
                               AlgebraicReal r2_descriptor) const {
    if (deg2() != 1) throw std::logic_error("tower already has a second level");
    if (m2_monic.size() < 2) throw std::invalid_argument("level-2 polynomial must be nonconstant");
    const K1Elem& lead = m2_monic.back();
    if (!(lead.size() == (size_t)deg1() && lead[0].is_one() &&
          [&] { for (size_t i = 1; i < lead.size(); ++i) if (!lead[i].is_zero()) return false; return true; }()))
        throw std::invalid_argument("level-2 polynomial must be monic");
    auto t = std::make_shared<ScalarTower>();
    t->m1_ = m1_;
    t->m2_ = std::move(m2_monic);
    t->r1_ = r1_;
    t->r2_ = std::move(r2_descriptor);
    return t;
}

K1Elem ScalarTower::k1_from(const Rational& r) const {
    K1Elem a(deg1());
    a[0] = r;
    return a;
}

K1Elem ScalarTower::k1_gen() const {
    K1Elem a(deg1());
    if (deg1() == 1) {
        // r1 is rational; the "generator" is just its value.
        a[0] = -m1_.coeff(0);
    } else {
        a[1] = Rational(1);
    }
    return a;
}

K1Elem ScalarTower::k1_add(const K1Elem& a, const K1Elem& b) const {
    K1Elem r(deg1());
    for (int i = 0; i < deg1(); ++i) r[i] = a[i] + b[i];
    return r;
}

K1Elem ScalarTower::k1_sub(const K1Elem& a, const K1Elem& b) const {
    K1Elem r(deg1());
    for (int i = 0; i < deg1(); ++i) r[i] = a[i] - b[i];
    return r;
}

K1Elem ScalarTower::k1_neg(const K1Elem& a) const {
    K1Elem r(deg1());
    for (int i = 0; i < deg1(); ++i) r[i] = -a[i];
    return r;
}

K1Elem ScalarTower::k1_scale(const K1Elem& a, const Rational& s) const {
    K1Elem r(deg1());
    for (int i = 0; i < deg1(); ++i) r[i] = a[i] * s;
    return r;
}

K1Elem ScalarTower::k1_mul(const K1Elem& a, const K1Elem& b) const {
    int d = deg1();
    std::vector<Rational> conv(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < d; ++j)
            if (!b[j].is_zero()) conv[i + j] += a[i] * b[j];
    }
    // Reduce mod monic m1.
    for (int k = (int)conv.size() - 1; k >= d; --k) {
        if (conv[k].is_zero()) continue;
        Rational f = conv[k];
        conv[k] = Rational(0);
        for (int j = 0; j < d; ++j) conv[k - d + j] -= f * m1_.coeff(j);
    }
    conv.resize(d);
    return conv;
}

K1Elem ScalarTower::k1_conj(const K1Elem& a) const {
    if (deg1() == 1) return a;
    if (deg1() != 2) throw std::logic_error("conjugation needs a quadratic level");
    // For m1 = s^2 + b s + c the conjugate generator is -b - s.
    Rational b = m1_.coeff(1);
    return {a[0] - b * a[1], -a[1]};
}

K1Elem ScalarTower::k1_inv(const K1Elem& a) const {
    if (k1_is_zero(a)) throw std::domain_error("inverse of zero");
    if (deg1() == 1) return {a[0].inverse()};
    if (deg1() != 2) throw std::logic_error("inversion needs degree <= 2");
    K1Elem cj = k1_conj(a);
    K1Elem n = k1_mul(a, cj);  // rational: norm
    if (!n[1].is_zero()) throw std::logic_error("norm not rational");
    return k1_scale(cj, n[0].inverse());
}

bool ScalarTower::k1_is_zero(const K1Elem& a) const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool ScalarTower::k1_is_rational(const K1Elem& a) const {
    for (size_t i = 1; i < a.size(); ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

int ScalarTower::k1_sign(const K1Elem& a) const {
    if (k1_is_rational(a)) return a[0].sign();
    // m1 irreducible of degree >= 2, so {1, r1, ...} are independent over Q
    // and a nonzero element has nonzero value; interval arithmetic on a
    // shrinking enclosure of r1 decides the sign in finitely many steps.
    AlgebraicReal r = r1_;
    Rational width = r.isolating_interval().width();
    for (int step = 0; step < 2000; ++step) {
        Interval iv = r.isolating_interval();
        // Evaluate sum a_i * r1^i over the interval.
        Rational lo = a[0], hi = a[0];
        Rational plo = Rational(1), phi = Rational(1);
        Rational xlo = iv.lo, xhi = iv.hi;
        for (size_t i = 1; i < a.size(); ++i) {
            // power interval
            Rational q1 = plo * xlo, q2 = plo * xhi, q3 = phi * xlo, q4 = phi * xhi;
            plo = std::min(std::min(q1, q2), std::min(q3, q4));
            phi = std::max(std::max(q1, q2), std::max(q3, q4));
            if (a[i].is_zero()) continue;
            Rational t1 = a[i] * plo, t2 = a[i] * phi;
            lo += std::min(t1, t2);
            hi += std::max(t1, t2);
        }
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        width = width / Rational(4);
        r = r.refined(width);
    }
    throw std::logic_error("sign determination did not converge");
}

std::string ScalarTower::k1_str(const K1Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        if (!first) os << " + ";
        os << a[i].str();
        if (i >= 1) os << "*r1";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

TowerElem::TowerElem(TowerPtr tower, std::vector<K1Elem> coeffs)
    : tower_(std::move(tower)), c_(std::move(coeffs)) {
    reduce();
}

TowerElem TowerElem::from_rational(const TowerPtr& tower, const Rational& r) {
    std::vector<K1Elem> c(tower->deg2(), tower->k1_zero());
    c[0] = tower->k1_from(r);
    return TowerElem(tower, std::move(c));
}

TowerElem TowerElem::from_k1(const TowerPtr& tower, const K1Elem& a) {
    std::vector<K1Elem> c(tower->deg2(), tower->k1_zero());
    c[0] = a;
    return TowerElem(tower, std::move(c));
}

TowerElem TowerElem::r1(const TowerPtr& tower) {
    return from_k1(tower, tower->k1_gen());
}

TowerElem TowerElem::r2(const TowerPtr& tower) {
    std::vector<K1Elem> c(tower->deg2(), tower->k1_zero());
    if (tower->deg2() == 1) {
        // r2 = 0 in a trivial second level.
    } else {
        c[1] = tower->k1_from(Rational(1));
    }
    return TowerElem(tower, std::move(c));
}

void TowerElem::reduce() {
    const auto& tw = *tower_;
    int d2 = tw.deg2();
    // Reduce t-powers >= d2 by the monic m2.
    for (int k = (int)c_.size() - 1; k >= d2; --k) {
        if (tw.k1_is_zero(c_[k])) continue;
        K1Elem f = c_[k];
        c_[k] = tw.k1_zero();
        for (int j = 0; j < d2; ++j)
            c_[k - d2 + j] = tw.k1_sub(c_[k - d2 + j], tw.k1_mul(f, tw.m2()[j]));
    }
    c_.resize(d2, tw.k1_zero());
}

bool TowerElem::is_zero() const {
    for (const auto& row : c_)
        if (!tower_->k1_is_zero(row)) return false;
    return true;
}

bool TowerElem::is_rational() const {
    if (!tower_->k1_is_rational(c_[0])) return false;
    for (size_t j = 1; j < c_.size(); ++j)
        if (!tower_->k1_is_zero(c_[j])) return false;
    return true;
}

Rational TowerElem::rational_value() const {
    if (!is_rational()) throw std::logic_error("tower element is not rational");
    return c_[0][0];
}

K1Elem TowerElem::k1_value() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (!tower_->k1_is_zero(c_[j]))
            throw std::logic_error("tower element has a second-level component");
    return c_[0];
}

TowerElem TowerElem::operator-() const {
    TowerElem r = *this;
    for (auto& row : r.c_) row = tower_->k1_neg(row);
    return r;
}

TowerElem operator+(const TowerElem& a, const TowerElem& b) {
    if (a.tower_ != b.tower_) throw std::logic_error("tower mismatch");
    TowerElem r = a;
    for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = a.tower_->k1_add(a.c_[j], b.c_[j]);
    return r;
}

TowerElem operator-(const TowerElem& a, const TowerElem& b) { return a + (-b); }

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    if (a.tower_ != b.tower_) throw std::logic_error("tower mismatch");
    const auto& tw = *a.tower_;
    std::vector<K1Elem> conv(a.c_.size() + b.c_.size() - 1, tw.k1_zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (tw.k1_is_zero(a.c_[i])) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (tw.k1_is_zero(b.c_[j])) continue;
            conv[i + j] = tw.k1_add(conv[i + j], tw.k1_mul(a.c_[i], b.c_[j]));
        }
    }
    return TowerElem(a.tower_, std::move(conv));
}

TowerElem TowerElem::operator*(const Rational& s) const {
    TowerElem r = *this;
    for (auto& row : r.c_) row = tower_->k1_scale(row, s);
    return r;
}

bool TowerElem::operator==(const TowerElem& o) const {
    return tower_ == o.tower_ && (*this - o).is_zero();
}

std::string TowerElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (tower_->k1_is_zero(c_[j])) continue;
        if (!first) os << " + ";
        os << "(" << tower_->k1_str(c_[j]) << ")";
        if (j >= 1) os << "*r2";
        if (j >= 2) os << "^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace sullivan
