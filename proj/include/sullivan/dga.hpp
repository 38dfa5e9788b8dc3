#pragma once

#include "sullivan/graded.hpp"
#include "sullivan/linalg.hpp"

#include <vector>

namespace sullivan {

// Free graded-commutative algebra with a degree +1 differential given on
// generators and extended by the graded Leibniz rule. Minimality means
// every differential value is decomposable (word length >= 2).
struct DGA {
    FreeGCA algebra;
    std::vector<GradedPoly> differential;  // per generator

    int add_generator(const std::string& name, int degree, GradedPoly d_value);

    // Leibniz extension of the differential to an arbitrary element.
    GradedPoly d(const GradedPoly& elem) const;
    GradedPoly d_monomial(const Monomial& m) const;

    // Throws if some d(gen) is indecomposable, has the wrong degree, or
    // fails d(d(gen)) = 0.
    void validate() const;

    // Cocycle representatives spanning H^degree of the complex.
    std::vector<GradedPoly> cohomology_basis(int degree) const;

    // Matrix of d from degree d to d+1 over the monomial bases.
    QMatrix d_matrix(int degree) const;
};

}  // namespace sullivan
