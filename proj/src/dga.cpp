#include "sullivan/dga.hpp"

#include <algorithm>

namespace sullivan {

int DGA::add_generator(const std::string& name, int degree, GradedPoly d_value) {
    int idx = algebra.add_generator(name, degree);
    differential.push_back(std::move(d_value));
    return idx;
}

GradedPoly DGA::d_monomial(const Monomial& m) const {
    GradedPoly out;
    const auto& fs = m.factors();
    for (size_t j = 0; j < fs.size(); ++j) {
        auto [g, e] = fs[j];
        const GradedPoly& dg = differential[g];
        if (dg.is_zero()) continue;

        // Leibniz: prefix * (e * g^(e-1) * dg) * suffix, signed by the
        // prefix degree.
        std::vector<std::pair<int, int>> pre(fs.begin(), fs.begin() + j);
        std::vector<std::pair<int, int>> suf(fs.begin() + j + 1, fs.end());
        int pre_deg = 0;
        for (auto& [pg, pe] : pre) pre_deg += algebra.gen(pg).degree * pe;

        GradedPoly term = GradedPoly::term(Monomial(pre), Rational(1));
        if (e > 1)
            term = algebra.mul(term,
                               GradedPoly::term(Monomial::power(g, e - 1), Rational(e)));
        term = algebra.mul(term, dg);
        term = algebra.mul(term, GradedPoly::term(Monomial(suf), Rational(1)));
        if (pre_deg % 2 == 1) term = -term;
        out = out + term;
    }
    return out;
}

GradedPoly DGA::d(const GradedPoly& elem) const {
    GradedPoly out;
    for (const auto& [m, c] : elem.terms()) out = out + d_monomial(m).scaled(c);
    return out;
}

void DGA::validate() const {
    for (int g = 0; g < algebra.size(); ++g) {
        const GradedPoly& dg = differential[g];
        if (dg.is_zero()) continue;
        auto deg = algebra.degree_of(dg);
        if (!deg || *deg != algebra.gen(g).degree + 1)
            throw MalformedPresentation("differential of '" + algebra.gen(g).name +
                                        "' is not homogeneous of degree +1");
        for (const auto& [m, c] : dg.terms())
            if (m.total_exponent() < 2)
                throw MalformedPresentation("differential of '" + algebra.gen(g).name +
                                            "' is not decomposable");
        if (!d(dg).is_zero())
            throw MalformedPresentation("d(d(" + algebra.gen(g).name + ")) != 0");
    }
}

QMatrix DGA::d_matrix(int degree) const {
    auto dom = algebra.monomials_of_degree(degree);
    auto cod = algebra.monomials_of_degree(degree + 1);
    QMatrix m((int)cod.size(), (int)dom.size());
    for (int j = 0; j < (int)dom.size(); ++j) {
        GradedPoly img = d_monomial(dom[j]);
        for (const auto& [mono, c] : img.terms()) {
            auto it = std::lower_bound(cod.begin(), cod.end(), mono, ColumnLess{});
            if (it == cod.end() || !(*it == mono))
                throw std::logic_error("differential image " + algebra.monomial_str(mono) +
                                       " missing from degree " + std::to_string(degree + 1));
            m.at((int)(it - cod.begin()), j) = c;
        }
    }
    return m;
}

std::vector<GradedPoly> DGA::cohomology_basis(int degree) const {
    auto monos = algebra.monomials_of_degree(degree);
    if (monos.empty()) return {};

    QMatrix dn = d_matrix(degree);
    std::vector<QVector> cycles = kernel_basis(dn);
    if (cycles.empty()) return {};

    std::vector<QVector> boundaries;
    if (degree >= 1) {
        QMatrix dprev = d_matrix(degree - 1);
        boundaries = column_space_basis(dprev);
    }

    // Kernel vectors completing the boundary span, by the fixed pivot rule.
    QMatrix mix((int)monos.size(), (int)(boundaries.size() + cycles.size()));
    for (int r = 0; r < mix.rows; ++r) {
        for (size_t c = 0; c < boundaries.size(); ++c) mix.at(r, (int)c) = boundaries[c][r];
        for (size_t c = 0; c < cycles.size(); ++c)
            mix.at(r, (int)(boundaries.size() + c)) = cycles[c][r];
    }
    Rref rr = rref(std::move(mix));

    std::vector<GradedPoly> reps;
    for (int pc : rr.pivot_cols) {
        if (pc < (int)boundaries.size()) continue;
        const QVector& v = cycles[pc - boundaries.size()];
        GradedPoly rep;
        for (size_t i = 0; i < monos.size(); ++i)
            if (!v[i].is_zero()) rep.add_term(monos[i], v[i]);
        reps.push_back(std::move(rep));
    }
    return reps;
}

}  // namespace sullivan
