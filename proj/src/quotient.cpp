#include "sullivan/quotient.hpp"

#include <algorithm>

namespace sullivan {

QuotientAlgebra::QuotientAlgebra(Presentation pres, int cap)
    : pres_(std::move(pres)), cap_(cap) {
    if (cap_ < 0) throw std::invalid_argument("cap must be nonnegative");
    pres_.validate();

    by_degree_.resize(cap_ + 1);
    const FreeGCA& A = pres_.algebra;

    for (int d = 0; d <= cap_; ++d) {
        DegreeData& dd = by_degree_[d];
        dd.monos = A.monomials_of_degree(d);
        int ncols = (int)dd.monos.size();

        // Span of relation multiples in degree d.
        std::vector<QVector> rows;
        for (const auto& rel : pres_.relations) {
            int rd = pres_.relation_degree(rel);
            if (rd > d) continue;
            for (const Monomial& m : A.monomials_of_degree(d - rd)) {
                GradedPoly prod = A.mul(GradedPoly::term(m, Rational(1)), rel);
                if (prod.is_zero()) continue;
                QVector row(ncols);
                for (const auto& [mono, c] : prod.terms())
                    row[mono_position(d, mono)] = c;
                rows.push_back(std::move(row));
            }
        }

        std::vector<bool> is_pivot(ncols, false);
        std::vector<QVector> pivot_expr;  // per pivot: full rref row
        std::vector<int> pivot_col;
        if (!rows.empty()) {
            QMatrix m((int)rows.size(), ncols);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < ncols; ++c) m.at(r, c) = rows[r][c];
            Rref rr = rref(std::move(m));
            for (int i = 0; i < rr.rank; ++i) {
                int pc = rr.pivot_cols[i];
                is_pivot[pc] = true;
                pivot_col.push_back(pc);
                QVector row(ncols);
                for (int c = 0; c < ncols; ++c) row[c] = rr.m.at(i, c);
                pivot_expr.push_back(std::move(row));
            }
        }

        for (int c = 0; c < ncols; ++c)
            if (!is_pivot[c]) {
                dd.basis_index.push_back(c);
                dd.basis_monos.push_back(dd.monos[c]);
            }

        // Reduction rows: basis monomials map to themselves; pivot monomials
        // to minus the non-pivot tail of their rref row.
        int nbasis = (int)dd.basis_index.size();
        dd.reduce_rows.assign(ncols, QVector(nbasis));
        for (int j = 0; j < nbasis; ++j) dd.reduce_rows[dd.basis_index[j]][j] = Rational(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) {
            QVector& out = dd.reduce_rows[pivot_col[i]];
            for (int j = 0; j < nbasis; ++j) out[j] = -pivot_expr[i][dd.basis_index[j]];
        }
    }
}

int QuotientAlgebra::mono_position(int d, const Monomial& m) const {
    const auto& monos = by_degree_[d].monos;
    auto it = std::lower_bound(monos.begin(), monos.end(), m, ColumnLess{});
    if (it == monos.end() || !(*it == m))
        throw std::logic_error("monomial not found in degree " + std::to_string(d));
    return (int)(it - monos.begin());
}

int QuotientAlgebra::dim(int d) const {
    if (d < 0 || d > cap_) return 0;
    return (int)by_degree_[d].basis_monos.size();
}

const std::vector<Monomial>& QuotientAlgebra::basis(int d) const {
    return by_degree_.at(d).basis_monos;
}

const std::vector<Monomial>& QuotientAlgebra::free_monomials(int d) const {
    return by_degree_.at(d).monos;
}

const QVector& QuotientAlgebra::monomial_coords(int d, const Monomial& m) const {
    return by_degree_.at(d).reduce_rows[mono_position(d, m)];
}

std::vector<long> QuotientAlgebra::hilbert_coefficients() const {
    std::vector<long> h(cap_ + 1);
    for (int d = 0; d <= cap_; ++d) h[d] = dim(d);
    return h;
}

GradedPoly QuotientAlgebra::generator_class(int gen) const {
    GradedPoly g = GradedPoly::term(Monomial::power(gen, 1), Rational(1));
    return reduce(g);
}

bool poincare_pairing_check(const QuotientAlgebra& q, int n) {
    if (n > q.cap())
        throw CapExceeded("pairing check needs the quotient built to degree " +
                          std::to_string(n));
    if (q.dim(n) != 1) return false;
    for (int k = 0; k <= q.cap(); ++k)
        if (q.dim(k) != q.dim(n - k)) return false;
    for (int k = 0; k <= n / 2; ++k) {
        int dk = q.dim(k);
        if (dk == 0) continue;
        const auto& bk = q.basis(k);
        const auto& bnk = q.basis(n - k);
        QMatrix pairing(dk, dk);
        for (int i = 0; i < dk; ++i)
            for (int j = 0; j < dk; ++j) {
                GradedPoly prod = q.multiply(GradedPoly::term(bk[i], Rational(1)),
                                             GradedPoly::term(bnk[j], Rational(1)));
                auto v = q.coords(prod, n, Rational(0));
                pairing.at(i, j) = v[0];
            }
        if (rank(pairing) != dk) return false;
    }
    return true;
}

}  // namespace sullivan
