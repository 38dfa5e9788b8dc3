#include "sullivan/model.hpp"

#include <algorithm>
#include <string>

namespace sullivan {

namespace {

GradedPoly target_pow(const QuotientAlgebra& q, const GradedPoly& base, int e, int top) {
    GradedPoly acc = q.reduce(GradedPoly::term(Monomial::one(), Rational(1)));
    for (int i = 0; i < e; ++i) acc = q.multiply_ext(acc, base, top);
    return acc;
}

}  // namespace

GradedPoly PartialModel::image(const GradedPoly& elem) const {
    const QuotientAlgebra& q = *target;
    GradedPoly out;
    for (const auto& [m, c] : elem.terms()) {
        GradedPoly acc = GradedPoly::term(Monomial::one(), Rational(1));
        for (const auto& [g, e] : m.factors()) {
            acc = q.multiply_ext(acc, target_pow(q, morphism[g], e, top_degree), top_degree);
            if (acc.is_zero()) break;
        }
        out = out + acc.scaled(c);
    }
    return out;
}

PartialModel init_stage2(const QuotientAlgebra& target) {
    if (target.dim(0) != 1)
        throw MalformedPresentation("target is not connected in degree 0");
    if (target.dim(1) != 0)
        throw NotSimplyConnected("target has dim H^1 = " + std::to_string(target.dim(1)));

    PartialModel pm;
    pm.stage = 2;
    pm.target = &target;
    pm.top_degree = target.presentation().formal_dimension.value_or(target.cap());

    const auto& h2 = target.basis(2);
    for (size_t i = 0; i < h2.size(); ++i) {
        pm.dga.add_generator("u2_" + std::to_string(i + 1), 2, GradedPoly());
        pm.morphism.push_back(
            target.reduce(GradedPoly::term(h2[i], Rational(1))));
    }
    return pm;
}

std::vector<GradedPoly> stage_cohomology(const PartialModel& pm, int degree) {
    return pm.dga.cohomology_basis(degree);
}

PartialModel next_stage(const PartialModel& pm) {
    const QuotientAlgebra& q = *pm.target;
    int k = pm.stage;
    if (!q.presentation().formal_dimension && k + 2 > q.cap())
        throw CapExceeded("stage " + std::to_string(k + 1) +
                          " needs the target built to degree " + std::to_string(k + 2));

    PartialModel out = pm;
    out.stage = k + 1;

    // New closed generators onto a complement of the image in H^(k+1).
    std::vector<GradedPoly> reps1 = pm.dga.cohomology_basis(k + 1);
    int amb = pm.target_dim(k + 1);
    {
        QMatrix m1(amb, (int)reps1.size());
        if (amb > 0)
            for (size_t j = 0; j < reps1.size(); ++j) {
                GradedPoly img = pm.image(reps1[j]);
                auto v = q.coords(img, k + 1, Rational(0));
                for (int r = 0; r < amb; ++r) m1.at(r, (int)j) = v[r];
            }
        auto comp = image_complement(m1, amb);
        int idx = 1;
        for (const auto& y : comp) {
            const auto& bas = q.basis(k + 1);
            GradedPoly target_class;
            for (int r = 0; r < amb; ++r)
                if (!y[r].is_zero()) target_class.add_term(bas[r], y[r]);
            out.dga.add_generator("u" + std::to_string(k + 1) + "_" + std::to_string(idx++),
                                  k + 1, GradedPoly());
            out.morphism.push_back(std::move(target_class));
        }
    }

    // Generators killing the kernel classes one degree higher.
    std::vector<GradedPoly> reps2 = pm.dga.cohomology_basis(k + 2);
    if (!reps2.empty()) {
        int amb2 = pm.target_dim(k + 2);
        QMatrix m2(amb2, (int)reps2.size());
        if (amb2 > 0)
            for (size_t j = 0; j < reps2.size(); ++j) {
                GradedPoly img = pm.image(reps2[j]);
                auto v = q.coords(img, k + 2, Rational(0));
                for (int r = 0; r < amb2; ++r) m2.at(r, (int)j) = v[r];
            }
        auto ker = kernel_basis(m2);
        int idx = 1;
        for (const auto& z : ker) {
            GradedPoly cocycle;
            for (size_t i = 0; i < reps2.size(); ++i)
                if (!z[i].is_zero()) cocycle = cocycle + reps2[i].scaled(z[i]);
            out.dga.add_generator("v" + std::to_string(k + 1) + "_" + std::to_string(idx++),
                                  k + 1, std::move(cocycle));
            out.morphism.push_back(GradedPoly());  // exact targets are zero here
        }
    }

    return out;
}

ModelResult build_model(const QuotientAlgebra& target, int max_degree) {
    if (max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");
    PartialModel pm = init_stage2(target);
    while (pm.stage < max_degree) pm = next_stage(pm);

    RankTable rt;
    for (const auto& g : pm.dga.algebra.generators()) rt.bump(g.degree);
    return {std::move(pm), std::move(rt)};
}

namespace {

std::vector<long> series_mul(const std::vector<long>& a, const std::vector<long>& b, int cap) {
    std::vector<long> r(cap + 1, 0);
    for (int i = 0; i <= cap; ++i) {
        if (i >= (int)a.size() || a[i] == 0) continue;
        for (int j = 0; i + j <= cap; ++j) {
            if (j >= (int)b.size()) break;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

}  // namespace

FormalityCertificate borel_model(const Presentation& p) {
    p.validate();
    for (const auto& g : p.algebra.generators())
        if (g.degree % 2 == 1)
            throw OddGenerator("generator '" + g.name + "' has odd degree " +
                               std::to_string(g.degree));

    FormalityCertificate cert;
    cert.presentation = p;

    cert.model.algebra = FreeGCA(p.algebra.generators());
    cert.model.differential.assign(p.algebra.size(), GradedPoly());
    int cap = p.default_cap();
    for (size_t i = 0; i < p.relations.size(); ++i) {
        int rd = p.relation_degree(p.relations[i]);
        cert.model.add_generator("y" + std::to_string(i + 1), rd - 1, p.relations[i]);
    }
    cert.model.validate();

    // Product-formula series: prod (1 - t^{deg P}) / prod (1 - t^{deg x}).
    std::vector<long> series{1};
    for (const auto& g : p.algebra.generators()) {
        std::vector<long> geo(cap + 1, 0);
        for (int e = 0; e * g.degree <= cap; ++e) geo[e * g.degree] = 1;
        series = series_mul(series, geo, cap);
    }
    for (const auto& r : p.relations) {
        int rd = p.relation_degree(r);
        std::vector<long> f(cap + 1, 0);
        f[0] = 1;
        if (rd <= cap) f[rd] = -1;
        series = series_mul(series, f, cap);
    }
    cert.predicted_series = series;

    QuotientAlgebra q(p, cap);
    cert.actual_series = q.hilbert_coefficients();

    bool nonneg = std::all_of(series.begin(), series.end(), [](long v) { return v >= 0; });
    cert.regular = nonneg && cert.predicted_series == cert.actual_series;
    return cert;
}

}  // namespace sullivan
