#include "sullivan/linalg.hpp"

#include <stdexcept>

namespace sullivan {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols_in, int rows) {
    QMatrix m(rows, (int)cols_in.size());
    for (int c = 0; c < m.cols; ++c) {
        if ((int)cols_in[c].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols_in[c][r];
    }
    return m;
}

QVector QMatrix::apply(const QVector& x) const {
    if ((int)x.size() != cols) throw std::invalid_argument("vector length mismatch");
    QVector y(rows);
    for (int r = 0; r < rows; ++r) {
        Rational acc;
        for (int c = 0; c < cols; ++c)
            if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

Rref rref(QMatrix m) {
    Rref out;
    int lead = 0;
    for (int col = 0; col < m.cols && lead < m.rows; ++col) {
        int pr = -1;
        for (int r = lead; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != lead)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(lead, c));
        Rational inv = m.at(lead, col).inverse();
        for (int c = col; c < m.cols; ++c) m.at(lead, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(lead, c);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = (int)out.pivot_cols.size();
    out.m = std::move(m);
    return out;
}

int rank(const QMatrix& m) { return rref(m).rank; }

std::vector<QVector> kernel_basis(const QMatrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(m.cols);
        v[free] = Rational(1);
        for (int i = 0; i < r.rank; ++i)
            v[r.pivot_cols[i]] = -r.m.at(i, free);
        // Normalize: first nonzero coordinate = 1.
        for (auto& x : v)
            if (!x.is_zero()) {
                Rational s = x.inverse();
                if (!s.is_one())
                    for (auto& y : v) y *= s;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<QVector> image_complement(const QMatrix& m, int ambient_dim) {
    if (m.rows != ambient_dim)
        throw std::invalid_argument("ambient dimension does not match row count");
    // Append the identity and keep the standard vectors that grow the rank.
    QMatrix ext(ambient_dim, m.cols + ambient_dim);
    for (int r = 0; r < ambient_dim; ++r) {
        for (int c = 0; c < m.cols; ++c) ext.at(r, c) = m.at(r, c);
        ext.at(r, m.cols + r) = Rational(1);
    }
    Rref rr = rref(ext);
    std::vector<QVector> comp;
    for (int c : rr.pivot_cols) {
        if (c < m.cols) continue;
        QVector e(ambient_dim);
        e[c - m.cols] = Rational(1);
        comp.push_back(std::move(e));
    }
    return comp;
}

std::vector<QVector> column_space_basis(const QMatrix& m) {
    Rref r = rref(m);
    std::vector<QVector> basis;
    for (int c : r.pivot_cols) {
        QVector v(m.rows);
        for (int row = 0; row < m.rows; ++row) v[row] = m.at(row, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sullivan
