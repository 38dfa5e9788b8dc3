#include "sullivan/unipoly.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace sullivan {

Rational UniPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational((long)i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

UniPoly::DivMod UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly rem = *this;
    std::vector<Rational> quot;
    int dd = divisor.degree();
    if (rem.degree() >= dd) quot.resize(rem.degree() - dd + 1);
    Rational lead_inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rational f = rem.leading() * lead_inv;
        quot[k] = f;
        std::vector<Rational> rc = rem.c_;
        for (int i = 0; i <= dd; ++i) rc[k + i] -= f * divisor.c_[i];
        rem = UniPoly(std::move(rc));
    }
    return {UniPoly(std::move(quot)), rem};
}

UniPoly UniPoly::compose_shift(const Rational& shift) const {
    // Horner in (x + shift).
    UniPoly acc;
    UniPoly lin({shift, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * lin + UniPoly::constant(*it);
    return acc;
}

UniPoly UniPoly::compose_scale(const Rational& scale) const {
    std::vector<Rational> r(c_.size());
    Rational pw(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * pw;
        pw *= scale;
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = c_[k];
        if (a.is_zero()) continue;
        Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag.is_one() && k > 0;
        if (!unit) os << mag.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).rem;
        x = y;
        y = r;
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = gcd(p, p.derivative());
    return p.divmod(g).quot.monic();
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
    // Euclidean recursion: res(a,b) = lc(b)^(deg a - deg r) (-1)^(deg a deg b) res(b, r).
    if (a.is_zero() || b.is_zero()) return Rational(0);
    if (b.degree() == 0) {
        Rational lc = b.leading(), out(1);
        for (int i = 0; i < a.degree(); ++i) out *= lc;
        return out;
    }
    if (a.degree() < b.degree()) {
        Rational s = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? Rational(-1) : Rational(1);
        return s * resultant(b, a);
    }
    UniPoly r = a.divmod(b).rem;
    if (r.is_zero()) return Rational(0);
    Rational lc = b.leading(), f(1);
    for (int i = 0; i < a.degree() - r.degree(); ++i) f *= lc;
    Rational s = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? Rational(-1) : Rational(1);
    return s * f * resultant(b, r);
}

SturmChain::SturmChain(const UniPoly& p) {
    chain_.push_back(p);
    if (p.degree() >= 1) {
        chain_.push_back(p.derivative());
        while (true) {
            const UniPoly& s = chain_[chain_.size() - 2];
            const UniPoly& t = chain_.back();
            UniPoly r = s.divmod(t).rem;
            if (r.is_zero()) break;
            chain_.push_back(-r);
        }
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int var = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_all_roots(const Rational& bound) const {
    return count_roots(-bound, bound);
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational mx(0);
    Rational lead = p.leading().abs();
    for (int i = 0; i < p.degree(); ++i) {
        Rational v = p.coeff(i).abs() / lead;
        if (v > mx) mx = v;
    }
    return mx + Rational(1);
}

std::vector<Interval> sturm_isolate(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
    UniPoly sf = squarefree_part(p);
    std::vector<Interval> out;
    if (sf.degree() < 1) return out;

    SturmChain chain(sf);
    Rational bound = cauchy_root_bound(sf);

    // Split points are always chosen off the root set.
    auto pick_split = [&](const Rational& lo, const Rational& hi) {
        Rational m = midpoint(lo, hi);
        if (sf.sign_at(m) != 0) return m;
        int deg = sf.degree();
        for (int k = 1; k <= deg + 1; ++k) {
            Rational t = lo + (hi - lo) * Rational(k, deg + 2);
            if (sf.sign_at(t) != 0) return t;
        }
        throw std::logic_error("no root-free split point found");
    };

    std::deque<Interval> work;
    work.push_back({-bound, bound});
    while (!work.empty()) {
        Interval iv = work.front();
        work.pop_front();
        int n = chain.count_roots(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rational m = pick_split(iv.lo, iv.hi);
        work.push_back({iv.lo, m});
        work.push_back({m, iv.hi});
    }

    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    // Bisection partitions share endpoints; shrink neighbours until the
    // intervals are pairwise disjoint.
    auto shrink = [&](Interval& iv) {
        Rational m = pick_split(iv.lo, iv.hi);
        if (chain.count_roots(iv.lo, m) == 1)
            iv.hi = m;
        else
            iv.lo = m;
    };
    for (size_t i = 0; i + 1 < out.size(); ++i)
        while (out[i + 1].lo <= out[i].hi) {
            shrink(out[i]);
            shrink(out[i + 1]);
        }
    return out;
}

}  // namespace sullivan
