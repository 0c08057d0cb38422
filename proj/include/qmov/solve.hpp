#ifndef QMOV_SOLVE_HPP
#define QMOV_SOLVE_HPP

#include <vector>

#include "qmov/affine.hpp"

namespace qmov {

// Solution set of a system of affine equations expr = 0 in unknowns
// x_0..x_{nvars-1}.  When consistent, the set is
//   particular + span(homogeneous_basis),
// with one basis vector per free unknown, and affine_rank = nvars - rank is
// its dimension.  When inconsistent, affine_rank = -1 and the vectors are
// empty.
struct SolutionSpace {
    int rank = 0;
    int affine_rank = 0;
    std::vector<RatFunc> particular;
    std::vector<std::vector<RatFunc>> homogeneous_basis;
    std::vector<int> free_params;

    bool consistent() const { return affine_rank >= 0; }

    // True if vals (size nvars) satisfies every constraint of the reduced
    // system, i.e. lies in the solution set.
    bool contains(const std::vector<RatFunc>& vals) const;

private:
    friend SolutionSpace solve_affine(const std::vector<AffineExpr>&, int);
    // Reduced pivot rows in integer Laurent form, one per pivot unknown:
    // (pivot id, coefficients indexed by unknown, constant term).
    struct Row {
        int pivot;
        std::vector<LaurentPoly> coeff;
        LaurentPoly c0;
    };
    std::vector<Row> rows_;
};

// Gaussian elimination over the rational function field, structured to stay
// exact: rows are cleared to a common Laurent-polynomial denominator and
// kept primitive between eliminations.  Deterministic: pivots are chosen as
// the lowest-indexed unknown of each reduced row, in input order.
SolutionSpace solve_affine(const std::vector<AffineExpr>& equations, int nvars);

}  // namespace qmov

#endif
