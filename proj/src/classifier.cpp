#include "sullivan/classifier.hpp"

#include <algorithm>
#include <sstream>

namespace sullivan {

bool check_elliptic_inequalities(const EllipticProfile& p) {
    long even = 0, odd = 0;
    for (const auto& [r, n] : p.ranks.ranks) {
        if (r % 2 == 0)
            even += (long)r * n;
        else
            odd += (long)r * n;
    }
    return even <= p.dimension && odd <= 2 * p.dimension - 1;
}

const char* to_string(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::CohomologySphere: return "CohomologySphere";
        case VerdictTag::ProductS2S3: return "ProductS2S3";
        case VerdictTag::ProductS2S4: return "ProductS2S4";
        case VerdictTag::ProductS3S3: return "ProductS3S3";
        case VerdictTag::ComplexProjective3: return "ComplexProjective3";
        case VerdictTag::S2xCP2: return "S2xCP2";
        case VerdictTag::NotGeometricallyFormal_b2_2: return "NotGeometricallyFormal_b2_2";
        case VerdictTag::RankProfileS2S2S2: return "RankProfileS2S2S2";
        case VerdictTag::Impossible: return "Impossible";
    }
    return "?";
}

Verdict classify_dim5(int b2) {
    if (b2 < 0) throw std::invalid_argument("negative Betti number");
    if (b2 == 0) return {VerdictTag::CohomologySphere, "rational cohomology S^5"};
    if (b2 == 1) return {VerdictTag::ProductS2S3, "rational cohomology S^2 x S^3"};
    std::ostringstream os;
    os << "rk pi_3 = b2 + b2(b2+1)/2 = " << dim5_rank_pi3(b2)
       << " exceeds the elliptic bound 3";
    return {VerdictTag::Impossible, os.str()};
}

namespace {

RankTable rank_table_of(const PartialModel& pm) {
    RankTable rt;
    for (const auto& g : pm.dga.algebra.generators()) rt.bump(g.degree);
    return rt;
}

std::string ranks_str(const RankTable& rt) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, n] : rt.ranks) {
        if (!first) os << ", ";
        os << "pi_" << r << "=" << n;
        first = false;
    }
    return os.str();
}

// Staged model with an ellipticity early-out; stops as soon as the partial
// rank sums already violate the dimension-6 bounds.
struct StagedRanks {
    RankTable ranks;
    bool elliptic;
};

StagedRanks staged_ranks_dim6(const QuotientAlgebra& q, int max_degree) {
    PartialModel pm = init_stage2(q);
    RankTable rt = rank_table_of(pm);
    while (pm.stage < max_degree) {
        pm = next_stage(pm);
        rt = rank_table_of(pm);
        if (!check_elliptic_inequalities({6, rt})) return {rt, false};
    }
    return {rt, true};
}

}  // namespace

Verdict classify_dim6(const QuotientAlgebra& q) {
    if (q.dim(1) != 0)
        throw DualityViolation("first Betti number is nonzero");
    if (!poincare_pairing_check(q, 6))
        throw DualityViolation("six-dimensional Poincare pairing is degenerate");

    int b2 = q.dim(2), b3 = q.dim(3);

    if (b2 == 0) {
        if (b3 == 0) return {VerdictTag::CohomologySphere, "rational cohomology S^6"};
        if (b3 == 2) return {VerdictTag::ProductS3S3, "rational cohomology S^3 x S^3"};
        std::ostringstream os;
        os << "rk pi_3 = b3 = " << b3 << " exceeds the elliptic bound 3";
        return {VerdictTag::Impossible, os.str()};
    }

    if (b2 == 1) {
        if (b3 > 0) {
            auto mr = build_model(q, 4);
            std::ostringstream os;
            os << "the staged model adds " << mr.ranks.rank(4)
               << " degree-4 generators, so rk pi_4 > 1";
            return {VerdictTag::Impossible, os.str()};
        }
        GradedPoly x = GradedPoly::term(q.basis(2)[0], Rational(1));
        GradedPoly x2 = q.multiply(x, x);
        if (x2.is_zero())
            return {VerdictTag::ProductS2S4, "x^2 = 0: rational cohomology S^2 x S^4"};
        return {VerdictTag::ComplexProjective3, "x^2 != 0: rational cohomology CP^3"};
    }

    if (b2 == 2) {
        // 2 b2 + 4 rk pi_4 <= 6 forces rk pi_4 = 0 here.
        auto mr = build_model(q, 4);
        if (mr.ranks.rank(4) > 0) {
            std::ostringstream os;
            os << "the staged model adds " << mr.ranks.rank(4)
               << " degree-4 generators, but rk pi_4 must vanish when b2 = 2";
            return {VerdictTag::Impossible, os.str()};
        }
        if (auto v = find_square_zero_class(q)) {
            return {VerdictTag::S2xCP2,
                    "square-zero degree-2 class " + q.algebra().poly_str_generic(v->cls) +
                        "; with Poincare duality the ring is that of S^2 x CP^2"};
        }
        NormalizedPair np = normalize_generators(q);
        std::ostringstream os;
        os << "no square-zero class; normalized generators satisfy xbar^2 "
           << (np.epsilon > 0 ? "+" : "-") << " ybar^2 = 0 and ybar^3 = 0";
        return {VerdictTag::NotGeometricallyFormal_b2_2, os.str()};
    }

    if (b2 == 3) {
        if (b3 > 0) {
            std::ostringstream os;
            os << "rk pi_3 >= b3 + 3 = " << (b3 + 3) << " exceeds the elliptic bound 3";
            return {VerdictTag::Impossible, os.str()};
        }
        StagedRanks sr = staged_ranks_dim6(q, 12);
        RankTable expect;
        expect.ranks = {{2, 3}, {3, 3}};
        if (sr.elliptic && sr.ranks == expect)
            return {VerdictTag::RankProfileS2S2S2,
                    "homotopy ranks (pi_2, pi_3) = (3, 3): those of S^2 x S^2 x S^2"};
        std::ostringstream os;
        os << "staged ranks " << ranks_str(sr.ranks) << " violate the elliptic bounds";
        return {VerdictTag::Impossible, os.str()};
    }

    std::ostringstream os;
    os << "2 b2 = " << 2 * b2 << " exceeds the dimension 6";
    return {VerdictTag::Impossible, os.str()};
}

namespace {

// Real root of a rational polynomial: exact rational roots are preferred
// (smallest magnitude first); otherwise the extreme real root, greatest or
// least as requested.
std::optional<AlgebraicReal> pick_real_root(const UniPoly& p, bool prefer_greatest) {
    auto ivs = sturm_isolate(p);
    if (ivs.empty()) return std::nullopt;
    UniPoly sf = squarefree_part(p);
    std::vector<AlgebraicReal> roots;
    for (const auto& iv : ivs) roots.emplace_back(sf, iv);
    const AlgebraicReal* best_rational = nullptr;
    for (const auto& r : roots) {
        if (!r.is_rational()) continue;
        if (!best_rational) {
            best_rational = &r;
            continue;
        }
        Rational a = r.rational_value(), b = best_rational->rational_value();
        if (a.abs() < b.abs() || (a.abs() == b.abs() && a < b)) best_rational = &r;
    }
    if (best_rational) return *best_rational;
    return prefer_greatest ? roots.back() : roots.front();
}

// Coordinates of reduced deg-4 squares of the two degree-2 basis classes.
struct DegreeTwoSquares {
    int h4 = 0;
    std::vector<Rational> xx, xy, yy;  // coords in the degree-4 basis
};

DegreeTwoSquares degree2_squares(const QuotientAlgebra& q) {
    if (q.dim(2) != 2) throw MalformedRing("expected dim H^2 = 2");
    DegreeTwoSquares s;
    s.h4 = q.dim(4);
    const Monomial &x = q.basis(2)[0], &y = q.basis(2)[1];
    auto coords_of = [&](const Monomial& a, const Monomial& b) {
        GradedPoly prod = q.multiply(GradedPoly::term(a, Rational(1)),
                                     GradedPoly::term(b, Rational(1)));
        return q.coords(prod, 4, Rational(0));
    };
    s.xx = coords_of(x, x);
    s.xy = coords_of(x, y);
    s.yy = coords_of(y, y);
    return s;
}

}  // namespace

std::optional<SquareZeroClass> find_square_zero_class(const QuotientAlgebra& q) {
    DegreeTwoSquares sq = degree2_squares(q);
    if (sq.h4 > 2) throw MalformedRing("expected dim H^4 <= 2");
    const Monomial &x = q.basis(2)[0], &y = q.basis(2)[1];

    auto make = [&](const TowerPtr& tw, TowerElem s, TowerElem t) {
        SquareZeroClass out;
        out.tower = tw;
        out.cls.add_term(x, s);
        out.cls.add_term(y, t);
        ExtGradedPoly square = q.multiply_ext(out.cls, out.cls);
        if (!square.is_zero())
            throw ReductionMismatch("square-zero candidate has nonzero square");
        out.s = std::move(s);
        out.t = std::move(t);
        return out;
    };

    // (s, t) = (1, 0): the class x itself.
    bool x_squares_to_zero = std::all_of(sq.xx.begin(), sq.xx.end(),
                                         [](const Rational& r) { return r.is_zero(); });
    if (x_squares_to_zero) {
        auto tw = ScalarTower::rationals();
        return make(tw, TowerElem::from_rational(tw, Rational(1)),
                    TowerElem::from_rational(tw, Rational(0)));
    }

    // Otherwise t != 0; scale to t = 1 and intersect the row quadratics
    // A_r s^2 + 2 B_r s + C_r = 0.
    UniPoly common = UniPoly();
    bool any_nonzero = false;
    for (int r = 0; r < sq.h4; ++r) {
        UniPoly p({sq.yy[r], Rational(2) * sq.xy[r], sq.xx[r]});
        if (p.is_zero()) continue;
        any_nonzero = true;
        common = common.is_zero() ? p.monic() : gcd(common, p);
        if (common.degree() == 0) return std::nullopt;
    }
    if (!any_nonzero) {
        // Every square vanishes; y works.
        auto tw = ScalarTower::rationals();
        return make(tw, TowerElem::from_rational(tw, Rational(0)),
                    TowerElem::from_rational(tw, Rational(1)));
    }

    auto root = pick_real_root(common, false);
    if (!root) return std::nullopt;

    if (root->is_rational()) {
        auto tw = ScalarTower::rationals();
        return make(tw, TowerElem::from_rational(tw, root->rational_value()),
                    TowerElem::from_rational(tw, Rational(1)));
    }
    TowerPtr tw = ScalarTower::with_root(*root);
    return make(tw, TowerElem::r1(tw), TowerElem::from_rational(tw, Rational(1)));
}

namespace {

// Polynomial with coefficients in the level-1 field of a tower.
struct K1Poly {
    TowerPtr tower;
    std::vector<K1Elem> c;  // ascending

    K1Elem eval(const Rational& x) const {
        K1Elem acc = tower->k1_zero();
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = tower->k1_add(tower->k1_mul(acc, tower->k1_from(x)), *it);
        return acc;
    }
    K1Poly conj() const {
        K1Poly r = *this;
        for (auto& a : r.c) a = tower->k1_conj(a);
        return r;
    }
    // p * conj(p); the result must have rational coefficients.
    UniPoly norm() const {
        K1Poly cj = conj();
        std::vector<K1Elem> conv(2 * c.size() - 1, tower->k1_zero());
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < cj.c.size(); ++j)
                conv[i + j] = tower->k1_add(conv[i + j], tower->k1_mul(c[i], cj.c[j]));
        std::vector<Rational> out(conv.size());
        for (size_t k = 0; k < conv.size(); ++k) {
            if (!tower->k1_is_rational(conv[k]))
                throw std::logic_error("norm polynomial is not rational");
            out[k] = conv[k][0];
        }
        return UniPoly(std::move(out));
    }
};

// Real root of a cubic with quadratic-field coefficients: isolate the
// roots of the rational norm and keep an interval across which the cubic
// itself changes sign.
AlgebraicReal select_k1_cubic_root(const K1Poly& p) {
    UniPoly n = squarefree_part(p.norm());
    for (const Interval& iv : sturm_isolate(n)) {
        int slo = p.tower->k1_sign(p.eval(iv.lo));
        int shi = p.tower->k1_sign(p.eval(iv.hi));
        if (slo != 0 && shi != 0 && slo != shi) return AlgebraicReal(n, iv);
    }
    throw std::logic_error("odd-degree polynomial lost its real root");
}

ExtGradedPoly ext_pow(const QuotientAlgebra& q, const ExtGradedPoly& a, int e) {
    ExtGradedPoly acc = a;
    for (int i = 1; i < e; ++i) acc = q.multiply_ext(acc, a);
    return acc;
}

// n-th root of a rational as a tower scalar; rational roots stay in the
// trivial tower.
std::pair<TowerPtr, TowerElem> radical_scalar(const Rational& v, int n) {
    AlgebraicReal root = AlgebraicReal::nth_root(v, n);
    if (root.is_rational()) {
        TowerPtr tw = ScalarTower::rationals();
        return {tw, TowerElem::from_rational(tw, root.rational_value())};
    }
    TowerPtr tw = ScalarTower::with_root(root);
    return {tw, TowerElem::r1(tw)};
}

}  // namespace

NormalizedPair normalize_generators(const QuotientAlgebra& q) {
    if (q.dim(2) != 2 || q.dim(4) != 2 || q.dim(6) != 1)
        throw MalformedRing("expected Betti numbers (b2, b4, b6) = (2, 2, 1)");
    if (find_square_zero_class(q))
        throw NotInCase_b("a square-zero degree-2 class exists");

    // The single degree-4 relation a x^2 + b xy + c y^2 = 0.
    const auto& free4 = q.free_monomials(4);
    if (free4.size() != 3)
        throw MalformedRing("degree 4 carries monomials beyond the degree-2 generators");
    QMatrix m4(q.dim(4), (int)free4.size());
    for (size_t j = 0; j < free4.size(); ++j) {
        const QVector& row = q.monomial_coords(4, free4[j]);
        for (int r = 0; r < q.dim(4); ++r) m4.at(r, (int)j) = row[r];
    }
    auto ker = kernel_basis(m4);
    if (ker.size() != 1)
        throw MalformedRing("expected exactly one degree-4 relation");

    int gx = q.basis(2)[0].factors()[0].first;
    int gy = q.basis(2)[1].factors()[0].first;
    Rational a, b, c;
    for (size_t j = 0; j < free4.size(); ++j) {
        if (free4[j].exponent_of(gx) == 2)
            a = ker[0][j];
        else if (free4[j].exponent_of(gy) == 2)
            c = ker[0][j];
        else
            b = ker[0][j];
    }

    int xi = 0, yi = 1;  // indices of the degree-2 basis monomials
    if (a.is_zero() && !c.is_zero()) {
        std::swap(xi, yi);
        std::swap(a, c);
    }
    const Monomial &xm = q.basis(2)[xi], &ym = q.basis(2)[yi];

    auto coord6 = [&](const GradedPoly& p) {
        return q.coords(p, 6, Rational(0))[0];
    };

    NormalizedPair np;

    if (a.is_zero() && c.is_zero()) {
        // Relation xy = 0; the remaining relation reads y^3 = alpha x^3.
        GradedPoly x3 = q.multiply(q.multiply(GradedPoly::term(xm, Rational(1)),
                                              GradedPoly::term(xm, Rational(1))),
                                   GradedPoly::term(xm, Rational(1)));
        GradedPoly y3 = q.multiply(q.multiply(GradedPoly::term(ym, Rational(1)),
                                              GradedPoly::term(ym, Rational(1))),
                                   GradedPoly::term(ym, Rational(1)));
        Rational xi3 = coord6(x3), eta3 = coord6(y3);
        if (xi3.is_zero() || eta3.is_zero())
            throw MalformedRing("cube of a degree-2 generator vanishes despite duality");
        Rational alpha = eta3 / xi3;

        auto [tw, r] = radical_scalar(alpha, 3);
        np.tower = tw;
        np.xbar.add_term(xm, r);
        np.xbar.add_term(ym, TowerElem::from_rational(tw, Rational(1)));
        np.ybar.add_term(xm, r);
        np.ybar.add_term(ym, TowerElem::from_rational(tw, Rational(-1)));
        np.epsilon = -1;
    } else {
        // Monic relation x^2 + b' xy + c' y^2 = 0; complete the square.
        Rational bp = b / a, cp = c / a;
        Rational beta = cp - bp * bp / Rational(4);
        if (beta.is_zero())
            throw ReductionMismatch("completed square vanishes but no square-zero class found");
        int sigma = beta.sign();

        auto [tw, sqrt_beta] = radical_scalar(beta.abs(), 2);

        // x1 = x + (b'/2) y (rational), y1 = sqrt|beta| * y.
        ExtGradedPoly x1, y1;
        x1.add_term(xm, TowerElem::from_rational(tw, Rational(1)));
        x1.add_term(ym, TowerElem::from_rational(tw, bp / Rational(2)));
        y1.add_term(ym, sqrt_beta);

        auto ext_coord6 = [&](const ExtGradedPoly& p) {
            return q.coords(p, 6, TowerElem::from_rational(tw, Rational(0)))[0];
        };
        TowerElem x1cube = ext_coord6(ext_pow(q, x1, 3));
        TowerElem y1cube = ext_coord6(ext_pow(q, y1, 3));

        if (x1cube.is_zero() || y1cube.is_zero()) {
            np.tower = tw;
            np.epsilon = sigma;
            if (x1cube.is_zero()) {
                np.xbar = y1;
                np.ybar = x1;
            } else {
                np.xbar = x1;
                np.ybar = y1;
            }
        } else {
            // y1^3 = alpha x1^3 with alpha in the level-1 field; kill the
            // cube of x1 + t y1 by solving the cubic in t.
            K1Elem alpha = tw->k1_mul(y1cube.k1_value(),
                                      tw->k1_inv(x1cube.k1_value()));
            // sigma = +1: alpha t^3 - 3 t^2 - 3 alpha t + 1 = 0
            // sigma = -1: alpha t^3 + 3 t^2 + 3 alpha t + 1 = 0
            K1Poly cubic{tw,
                         {tw->k1_from(Rational(1)),
                          tw->k1_scale(alpha, Rational(-3 * sigma)),
                          tw->k1_from(Rational(-3 * sigma)),
                          alpha}};

            TowerPtr full;     // tower holding the root t
            TowerElem t_elem;  // the root as a scalar
            if (tw->deg1() == 1) {
                // Rational cubic: prefer an exact rational root.
                std::vector<Rational> rc;
                for (const auto& k : cubic.c) rc.push_back(k[0]);
                UniPoly rpoly(std::move(rc));
                auto root = pick_real_root(rpoly, true);
                if (!root) throw std::logic_error("cubic without real root");
                if (root->is_rational()) {
                    full = tw;
                    t_elem = TowerElem::from_rational(full, root->rational_value());
                } else {
                    std::vector<K1Elem> m2;
                    Rational lead = rpoly.leading();
                    for (int k = 0; k <= 3; ++k)
                        m2.push_back(tw->k1_from(rpoly.coeff(k) / lead));
                    full = tw->extended(std::move(m2), *root);
                    t_elem = TowerElem::r2(full);
                }
            } else {
                AlgebraicReal root = select_k1_cubic_root(cubic);
                // Monicize over the quadratic field and extend the tower.
                K1Elem lead_inv = tw->k1_inv(cubic.c.back());
                std::vector<K1Elem> m2;
                for (const auto& k : cubic.c) m2.push_back(tw->k1_mul(k, lead_inv));
                full = tw->extended(std::move(m2), root);
                t_elem = TowerElem::r2(full);
            }

            auto lift = [&](const ExtGradedPoly& p) {
                ExtGradedPoly out;
                for (const auto& [m, cofs] : p.terms())
                    out.add_term(m, TowerElem::from_k1(full, cofs.k1_value()));
                return out;
            };
            ExtGradedPoly X1 = lift(x1), Y1 = lift(y1);
            ExtGradedPoly tY1 = Y1.scaled_by(t_elem);
            ExtGradedPoly tX1 = X1.scaled_by(t_elem);

            np.tower = full;
            np.epsilon = sigma;
            // ybar = x1 + t y1 has cube zero; xbar = t x1 -/+ y1 pairs with it.
            np.ybar = X1 + tY1;
            if (sigma > 0)
                np.xbar = tX1 - Y1;
            else
                np.xbar = tX1 + Y1;
        }
        if (!np.tower) np.tower = tw;
    }

    // Witnesses are the raw product expressions; their reductions must be
    // exactly zero.
    const FreeGCA& A = q.algebra();
    ExtGradedPoly xbar_sq = A.mul(np.xbar, np.xbar);
    ExtGradedPoly ybar_sq = A.mul(np.ybar, np.ybar);
    np.witness_degree4 =
        np.epsilon > 0 ? xbar_sq + ybar_sq : xbar_sq - ybar_sq;
    np.witness_degree6 = A.mul(A.mul(np.ybar, np.ybar), np.ybar);
    if (!q.reduce(np.witness_degree4).is_zero())
        throw ReductionMismatch("xbar^2 + eps ybar^2 does not reduce to zero");
    if (!q.reduce(np.witness_degree6).is_zero())
        throw ReductionMismatch("ybar^3 does not reduce to zero");
    return np;
}

CubicInstance cubic_root(const Rational& alpha) {
    // 1 - 3a^2 + alpha (a^3 - 3a); degenerates to the quadratic at alpha = 0.
    UniPoly p({Rational(1), Rational(-3) * alpha, Rational(-3), alpha});
    auto root = pick_real_root(p, true);
    if (!root) throw std::logic_error("the normalization cubic lost its real root");
    return {alpha, p, *root};
}

}  // namespace sullivan
