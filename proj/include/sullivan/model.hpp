#pragma once

#include "sullivan/dga.hpp"
#include "sullivan/quotient.hpp"

#include <map>
#include <vector>

namespace sullivan {

// Homotopy ranks: degree -> number of model generators of that degree.
struct RankTable {
    std::map<int, int> ranks;

    int rank(int r) const {
        auto it = ranks.find(r);
        return it == ranks.end() ? 0 : it->second;
    }
    void bump(int r) { ++ranks[r]; }
    bool operator==(const RankTable& o) const { return ranks == o.ranks; }
};

// One stage of the model construction: the free DGA built so far together
// with its morphism to the target ring (zero differential). The target is
// borrowed and must outlive the model.
struct PartialModel {
    int stage = 0;
    DGA dga;
    std::vector<GradedPoly> morphism;  // per dga generator, reduced target class
    const QuotientAlgebra* target = nullptr;
    int top_degree = 0;  // target degrees above this are zero

    int target_dim(int d) const {
        return d > top_degree ? 0 : target->dim(d);
    }
    // Algebra-morphism image of a stage element, reduced in the target.
    GradedPoly image(const GradedPoly& elem) const;
};

// Stage 2: one closed degree-2 generator per basis class of H^2.
// Throws NotSimplyConnected when dim H^1 != 0.
PartialModel init_stage2(const QuotientAlgebra& target);

// Stage k -> k+1 of the construction: adjoin closed generators mapping
// onto a complement of the image in degree k+1, and generators killing the
// kernel classes in degree k+2.
PartialModel next_stage(const PartialModel& pm);

// Cocycle representatives of H^degree of the stage algebra.
std::vector<GradedPoly> stage_cohomology(const PartialModel& pm, int degree);

struct ModelResult {
    PartialModel model;
    RankTable ranks;
};

// Run the staged construction through stage = max_degree.
ModelResult build_model(const QuotientAlgebra& target, int max_degree);

// Two-stage model for a polynomial presentation whose relations form a
// regular sequence: adjoin one odd generator per relation with dy = P. The
// certificate is regular when the product-formula series matches the
// actual quotient dimensions.
struct FormalityCertificate {
    Presentation presentation;
    DGA model;
    bool regular = false;
    std::vector<long> predicted_series;
    std::vector<long> actual_series;
};

FormalityCertificate borel_model(const Presentation& p);

}  // namespace sullivan
