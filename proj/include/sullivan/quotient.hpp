#pragma once

#include "sullivan/graded.hpp"
#include "sullivan/linalg.hpp"

#include <vector>

namespace sullivan {

// The presented algebra realized degree by degree up to a cap: in each
// degree the span of {monomial x relation} is eliminated from the free
// monomial basis, leaving a chosen quotient basis and an exact reduction
// map. Immutable once built.
class QuotientAlgebra {
public:
    QuotientAlgebra(Presentation pres, int cap);

    const Presentation& presentation() const { return pres_; }
    const FreeGCA& algebra() const { return pres_.algebra; }
    int cap() const { return cap_; }

    int dim(int d) const;
    const std::vector<Monomial>& basis(int d) const;
    const std::vector<Monomial>& free_monomials(int d) const;

    // Coordinates of a free monomial of degree d in basis(d).
    const QVector& monomial_coords(int d, const Monomial& m) const;

    // Rewrite a polynomial on the degreewise quotient bases.
    template <class C>
    BasicGradedPoly<C> reduce(const BasicGradedPoly<C>& p) const {
        BasicGradedPoly<C> out;
        for (const auto& [m, c] : p.terms()) {
            int d = algebra().degree(m);
            if (d > cap_)
                throw DegreeOverflow("degree " + std::to_string(d) +
                                     " exceeds the cap " + std::to_string(cap_));
            const QVector& row = monomial_coords(d, m);
            const auto& bas = basis(d);
            for (size_t j = 0; j < bas.size(); ++j)
                if (!row[j].is_zero()) out.add_term(bas[j], c * row[j]);
        }
        return out;
    }

    // Product in the quotient; DegreeOverflow above the cap. If truncate_above
    // is nonnegative, monomials above that degree are dropped instead (the
    // ring of a closed n-manifold vanishes above n).
    template <class C>
    BasicGradedPoly<C> multiply_ext(const BasicGradedPoly<C>& a, const BasicGradedPoly<C>& b,
                                    int truncate_above = -1) const {
        BasicGradedPoly<C> free_prod = algebra().mul(a, b);
        if (truncate_above >= 0) {
            BasicGradedPoly<C> kept;
            for (const auto& [m, c] : free_prod.terms())
                if (algebra().degree(m) <= truncate_above) kept.add_term(m, c);
            free_prod = std::move(kept);
        }
        return reduce(free_prod);
    }

    GradedPoly multiply(const GradedPoly& a, const GradedPoly& b) const {
        return multiply_ext<Rational>(a, b);
    }

    // Coordinates of a reduced homogeneous class in basis(d).
    template <class C>
    std::vector<C> coords(const BasicGradedPoly<C>& reduced, int d, const C& zero) const {
        const auto& bas = basis(d);
        std::vector<C> v(bas.size(), zero);
        for (const auto& [m, c] : reduced.terms()) {
            if (algebra().degree(m) != d)
                throw std::invalid_argument("class is not homogeneous of the stated degree");
            for (size_t j = 0; j < bas.size(); ++j)
                if (bas[j] == m) { v[j] = c; break; }
        }
        return v;
    }

    std::vector<long> hilbert_coefficients() const;

    // Class of a generator (reduced), degree-homogeneous unit, etc.
    GradedPoly unit() const { return GradedPoly::term(Monomial::one(), Rational(1)); }
    GradedPoly generator_class(int gen) const;

private:
    Presentation pres_;
    int cap_;
    struct DegreeData {
        std::vector<Monomial> monos;          // column order
        std::vector<int> basis_index;         // indices into monos
        std::vector<Monomial> basis_monos;
        std::vector<QVector> reduce_rows;     // per mono: coords in basis
    };
    std::vector<DegreeData> by_degree_;
    int mono_position(int d, const Monomial& m) const;
};

// Nondegenerate top-degree pairing test: dim H^n == 1, dim H^k == dim
// H^(n-k) for every computed degree, and every pairing matrix
// H^k x H^(n-k) -> H^n of full rank.
bool poincare_pairing_check(const QuotientAlgebra& q, int n);

}  // namespace sullivan
