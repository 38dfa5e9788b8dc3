#include "sullivan/algebraic_real.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sullivan {

namespace {

constexpr int kMaxRefineSteps = 20000;

[[noreturn]] void refine_overflow() {
    throw std::logic_error("interval refinement failed to converge");
}

// One bisection step against a squarefree polynomial with a sign change
// across the interval. Returns false when the interval is a point.
bool bisect_once(const UniPoly& p, Interval& iv, bool* became_rational, Rational* root) {
    if (iv.lo == iv.hi) return false;
    Rational m = midpoint(iv.lo, iv.hi);
    int sm = p.sign_at(m);
    if (sm == 0) {
        *became_rational = true;
        *root = m;
        return true;
    }
    if (sm == p.sign_at(iv.lo))
        iv.lo = m;
    else
        iv.hi = m;
    return true;
}

// Lagrange interpolation through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    UniPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly term = UniPoly::constant(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = term * UniPoly::linear_root(xs[j]);
            denom *= xs[i] - xs[j];
        }
        acc = acc + term.scaled(ys[i] / denom);
    }
    return acc;
}

// Strip a root at zero (used before multiplicative resultants).
UniPoly strip_zero_root(UniPoly p) {
    while (!p.is_zero() && p.coeff(0).is_zero())
        p = p.divmod(UniPoly({Rational(0), Rational(1)})).quot;
    return p;
}

}  // namespace

AlgebraicReal::AlgebraicReal(const Rational& r)
    : poly_(UniPoly::linear_root(r)), iv_{r, r} {}

AlgebraicReal::AlgebraicReal(UniPoly poly, Interval iv)
    : poly_(squarefree_part(poly)), iv_(iv) {
    if (poly_.degree() < 1) throw std::invalid_argument("constant defining polynomial");
    if (poly_.degree() == 1) {
        Rational r = -poly_.coeff(0) / poly_.coeff(1);
        if (!(iv_.lo <= r && r <= iv_.hi))
            throw std::invalid_argument("interval does not contain the root");
        poly_ = UniPoly::linear_root(r);
        iv_ = {r, r};
        return;
    }
    if (!(iv_.lo < iv_.hi)) throw std::invalid_argument("empty isolating interval");
    if (poly_.sign_at(iv_.lo) == 0 || poly_.sign_at(iv_.hi) == 0)
        throw std::invalid_argument("interval endpoint is a root");
    SturmChain chain(poly_);
    if (chain.count_roots(iv_.lo, iv_.hi) != 1)
        throw std::invalid_argument("interval does not isolate exactly one root");
    simplify();
}

AlgebraicReal AlgebraicReal::nth_root(const Rational& q, int n) {
    if (n == 2) {
        if (q.sign() < 0) throw std::domain_error("square root of a negative rational");
        Rational r;
        if (q.is_perfect_square(&r)) return AlgebraicReal(r);
        UniPoly p({-q, Rational(0), Rational(1)});
        // Only the positive root lies in [0, bound).
        Rational b = cauchy_root_bound(p);
        return AlgebraicReal(p, {Rational(0), b});
    }
    if (n == 3) {
        Rational r;
        if (q.is_perfect_cube(&r)) return AlgebraicReal(r);
        UniPoly p({-q, Rational(0), Rational(0), Rational(1)});
        auto ivs = sturm_isolate(p);
        if (ivs.size() != 1) throw std::logic_error("cube has one real root");
        return AlgebraicReal(p, ivs[0]);
    }
    throw std::domain_error("only square and cube roots supported");
}

Rational AlgebraicReal::rational_value() const {
    if (!is_rational()) throw std::logic_error("value is irrational");
    return iv_.lo;
}

void AlgebraicReal::simplify() {
    if (is_rational()) return;
    // Refine far enough that a rational value of moderate height is pinned,
    // then test the simplest candidate exactly.
    AlgebraicReal tmp = *this;
    for (int i = 0; i < 70 && tmp.iv_.lo < tmp.iv_.hi; ++i) {
        bool rat = false;
        Rational root;
        if (!bisect_once(tmp.poly_, tmp.iv_, &rat, &root)) break;
        if (rat) {
            *this = AlgebraicReal(root);
            return;
        }
    }
    Rational cand = simplest_rational_in(tmp.iv_.lo, tmp.iv_.hi);
    if (poly_.sign_at(cand) == 0) {
        *this = AlgebraicReal(cand);
        return;
    }
    // Tidy endpoints: expand the enclosure outward to the simplest
    // rationals that still isolate the root.
    SturmChain chain(poly_);
    Rational w(1, 16);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rational lo = simplest_rational_in(tmp.iv_.lo - w, tmp.iv_.lo);
        Rational hi = simplest_rational_in(tmp.iv_.hi, tmp.iv_.hi + w);
        if (poly_.sign_at(lo) != 0 && poly_.sign_at(hi) != 0 &&
            chain.count_roots(lo, hi) == 1) {
            iv_ = {lo, hi};
            return;
        }
        w = w / Rational(16);
    }
    iv_ = tmp.iv_;  // keep the sharper interval
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
    if (width.sign() <= 0) throw std::invalid_argument("width must be positive");
    AlgebraicReal r = *this;
    int guard = 0;
    while (r.iv_.width() > width) {
        bool rat = false;
        Rational root;
        if (!bisect_once(r.poly_, r.iv_, &rat, &root)) break;
        if (rat) return AlgebraicReal(root);
        if (++guard > kMaxRefineSteps) refine_overflow();
    }
    return r;
}

int AlgebraicReal::sign() const { return compare_rational(Rational(0)); }

int AlgebraicReal::compare_rational(const Rational& q) const {
    if (is_rational()) {
        Rational v = rational_value();
        return v < q ? -1 : (v == q ? 0 : 1);
    }
    if (iv_.contains(q) && poly_.sign_at(q) == 0) return 0;  // q is the root
    AlgebraicReal r = *this;
    int guard = 0;
    while (r.iv_.contains(q)) {
        bool rat = false;
        Rational root;
        bisect_once(r.poly_, r.iv_, &rat, &root);
        if (rat) return root < q ? -1 : (root == q ? 0 : 1);
        if (++guard > kMaxRefineSteps) refine_overflow();
    }
    return r.iv_.hi < q ? -1 : 1;
}

namespace {

// Whether the number (p, iv) is a root of the factor g of p. Refines the
// interval until it contains a single root of g·h where h = p/g; the value
// is then the g-root or the h-root, whichever is present.
bool is_root_of_factor(const UniPoly& p, Interval iv, const UniPoly& g) {
    UniPoly h = p.divmod(g).quot;
    if (h.degree() < 1) return true;  // p = g up to a constant
    SturmChain gc(g), hc(h);
    int guard = 0;
    while (true) {
        if (g.sign_at(iv.lo) != 0 && g.sign_at(iv.hi) != 0 &&
            h.sign_at(iv.lo) != 0 && h.sign_at(iv.hi) != 0) {
            int ng = gc.count_roots(iv.lo, iv.hi);
            int nh = hc.count_roots(iv.lo, iv.hi);
            if (ng + nh == 1) return ng == 1;
        }
        bool rat = false;
        Rational root;
        if (!bisect_once(p, iv, &rat, &root)) return g.sign_at(iv.lo) == 0;
        if (rat) return g.sign_at(root) == 0;
        if (++guard > kMaxRefineSteps) refine_overflow();
    }
}

}  // namespace

int AlgebraicReal::compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational()) return -b.compare_rational(a.rational_value());
    if (b.is_rational()) return a.compare_rational(b.rational_value());

    AlgebraicReal x = a, y = b;

    // Values can only coincide on a common root of the two defining
    // polynomials, i.e. a root of their gcd.
    UniPoly g = gcd(x.poly_, y.poly_);
    bool may_be_equal = g.degree() >= 1 &&
                        is_root_of_factor(x.poly_, x.iv_, g) &&
                        is_root_of_factor(y.poly_, y.iv_, g);
    std::optional<SturmChain> gchain;
    if (may_be_equal) gchain.emplace(g);

    int guard = 0;
    while (true) {
        if (x.iv_.hi < y.iv_.lo) return -1;
        if (y.iv_.hi < x.iv_.lo) return 1;
        if (may_be_equal) {
            // Both are g-roots; equal iff the interval union holds one g-root.
            Rational lo = std::min(x.iv_.lo, y.iv_.lo);
            Rational hi = std::max(x.iv_.hi, y.iv_.hi);
            if (g.sign_at(lo) != 0 && g.sign_at(hi) != 0 &&
                gchain->count_roots(lo, hi) == 1)
                return 0;
        }
        bool rat = false;
        Rational root;
        bisect_once(x.poly_, x.iv_, &rat, &root);
        if (rat) return -y.compare_rational(root);
        bisect_once(y.poly_, y.iv_, &rat, &root);
        if (rat) return x.compare_rational(root);
        if (++guard > kMaxRefineSteps) refine_overflow();
    }
}

AlgebraicReal AlgebraicReal::negated() const {
    if (is_rational()) return AlgebraicReal(-rational_value());
    std::vector<Rational> c(poly_.coeffs());
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return AlgebraicReal(UniPoly(std::move(c)), {-iv_.hi, -iv_.lo});
}

AlgebraicReal AlgebraicReal::plus_rational(const Rational& s) const {
    if (is_rational()) return AlgebraicReal(rational_value() + s);
    return AlgebraicReal(poly_.compose_shift(-s), {iv_.lo + s, iv_.hi + s});
}

AlgebraicReal AlgebraicReal::times_rational(const Rational& s) const {
    if (s.is_zero()) return AlgebraicReal(Rational(0));
    if (is_rational()) return AlgebraicReal(rational_value() * s);
    UniPoly q = poly_.compose_scale(s.inverse());
    Rational a = iv_.lo * s, b = iv_.hi * s;
    if (a > b) std::swap(a, b);
    return AlgebraicReal(std::move(q), {a, b});
}

namespace {

// Select the isolating interval of `cands` that captures the true value,
// narrowing the operands until only one candidate intersects the combined
// box. box(lo,hi) recomputes the enclosure of the exact result.
template <typename BoxFn, typename StepFn>
Interval select_candidate(const std::vector<Interval>& cands, BoxFn box, StepFn step) {
    int guard = 0;
    while (true) {
        Interval b = box();
        const Interval* hit = nullptr;
        int nhit = 0;
        for (const auto& J : cands) {
            if (J.lo <= b.hi && b.lo <= J.hi) {
                ++nhit;
                hit = &J;
            }
        }
        if (nhit == 1) return *hit;
        step();
        if (++guard > kMaxRefineSteps) refine_overflow();
    }
}

}  // namespace

AlgebraicReal AlgebraicReal::add(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational()) return b.plus_rational(a.rational_value());
    if (b.is_rational()) return a.plus_rational(b.rational_value());

    // Res_y(p(y), q(x - y)) vanishes exactly at sums of roots.
    const UniPoly &p = a.poly_, &q = b.poly_;
    int n = p.degree() * q.degree();
    std::vector<Rational> xs, ys;
    UniPoly q_neg = q.compose_scale(Rational(-1));
    for (int i = 0; i <= n; ++i) {
        Rational x0 = Rational(i % 2 == 0 ? i / 2 : -(i / 2 + 1));
        xs.push_back(x0);
        ys.push_back(resultant(p, q_neg.compose_shift(-x0)));
    }
    UniPoly res = interpolate(xs, ys);
    UniPoly sf = squarefree_part(res);
    auto cands = sturm_isolate(sf);

    AlgebraicReal x = a, y = b;
    Interval J = select_candidate(
        cands,
        [&]() { return Interval{x.iv_.lo + y.iv_.lo, x.iv_.hi + y.iv_.hi}; },
        [&]() {
            bool rat = false;
            Rational root;
            bisect_once(x.poly_, x.iv_, &rat, &root);
            if (rat) x = AlgebraicReal(root);
            bisect_once(y.poly_, y.iv_, &rat, &root);
            if (rat) y = AlgebraicReal(root);
        });
    if (x.is_rational() && y.is_rational())
        return AlgebraicReal(x.rational_value() + y.rational_value());
    if (x.is_rational()) return y.plus_rational(x.rational_value());
    if (y.is_rational()) return x.plus_rational(y.rational_value());
    return AlgebraicReal(sf, J);
}

AlgebraicReal AlgebraicReal::mul(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational()) return b.times_rational(a.rational_value());
    if (b.is_rational()) return a.times_rational(b.rational_value());

    // Res_y(p(y), y^m q(x/y)) vanishes exactly at products of (nonzero) roots.
    UniPoly p = strip_zero_root(a.poly_);
    UniPoly q = strip_zero_root(b.poly_);
    int m = q.degree();
    int n = p.degree() * q.degree();
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= n; ++i) {
        Rational x0 = Rational(i % 2 == 0 ? i / 2 : -(i / 2 + 1));
        xs.push_back(x0);
        std::vector<Rational> c(m + 1);
        Rational pw(1);
        for (int k = 0; k <= m; ++k) {  // coefficient of y^(m-k) is q_k x0^k
            c[m - k] = q.coeff(k) * pw;
            pw *= x0;
        }
        ys.push_back(resultant(p, UniPoly(std::move(c))));
    }
    UniPoly res = interpolate(xs, ys);
    UniPoly sf = squarefree_part(res);
    auto cands = sturm_isolate(sf);

    AlgebraicReal x = a, y = b;
    auto prod_box = [&]() {
        Rational v1 = x.iv_.lo * y.iv_.lo, v2 = x.iv_.lo * y.iv_.hi;
        Rational v3 = x.iv_.hi * y.iv_.lo, v4 = x.iv_.hi * y.iv_.hi;
        Rational lo = std::min(std::min(v1, v2), std::min(v3, v4));
        Rational hi = std::max(std::max(v1, v2), std::max(v3, v4));
        return Interval{lo, hi};
    };
    Interval J = select_candidate(cands, prod_box, [&]() {
        bool rat = false;
        Rational root;
        bisect_once(x.poly_, x.iv_, &rat, &root);
        if (rat) x = AlgebraicReal(root);
        bisect_once(y.poly_, y.iv_, &rat, &root);
        if (rat) y = AlgebraicReal(root);
    });
    if (x.is_rational() && y.is_rational())
        return AlgebraicReal(x.rational_value() * y.rational_value());
    if (x.is_rational()) return y.times_rational(x.rational_value());
    if (y.is_rational()) return x.times_rational(y.rational_value());
    return AlgebraicReal(sf, J);
}

std::string AlgebraicReal::str(const std::string& var) const {
    std::ostringstream os;
    if (is_rational()) {
        os << rational_value().str();
    } else {
        os << "root of " << poly_.str(var) << " in [" << iv_.lo.str() << ", "
           << iv_.hi.str() << "]";
    }
    return os.str();
}

}  // namespace sullivan
