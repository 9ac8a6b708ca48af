// Numerical membership oracle: constrained Chebyshev minimax problems over
// finite-dimensional polynomial spaces on sampled sets, separating-polynomial
// certificates, and grid hull approximation.
#pragma once

#include <vector>

#include "hullbound/poly.h"
#include "hullbound/verdict.h"

namespace hullbound {

/// Normalization pinning one degree of freedom of the minimax problem.
struct MinimaxConstraint {
    enum class Kind { point_value, monic };
    Kind kind = Kind::point_value;
    // Query point for point_value mode (w2 used in dimension 2). The basis
    // must contain the constant monomial in this mode; in monic mode the
    // last (highest graded-lex) basis monomial gets coefficient one.
    cplx w{};
    cplx w2{};

    static MinimaxConstraint at_point(cplx w, cplx w2 = cplx(0.0, 0.0)) {
        MinimaxConstraint c;
        c.kind = Kind::point_value;
        c.w = w;
        c.w2 = w2;
        return c;
    }
    static MinimaxConstraint monic() {
        MinimaxConstraint c;
        c.kind = Kind::monic;
        return c;
    }
};

struct MinimaxOptions {
    int directions = 128;       // modulus polygon order L (even, >= 8)
    double coeff_bound = 1e6;   // box |Re c|, |Im c| <= bound keeps the LP bounded
    bool force_lp = false;      // disable the exact interpolation shortcut
    int max_rounds = 60;        // cutting-plane rounds
};

/// Solution of a constrained discrete minimax problem.
struct MinimaxSolution {
    // Optimum of the polygonal relaxation; the true max modulus over the
    // samples lies in [value, value * sec(pi/L)].
    double value = 0.0;
    // Full coefficient vector over the supplied basis, including the
    // coefficient fixed by the constraint.
    std::vector<cplx> coefficients;
    // Indices of samples within 1e-6 of the achieved max modulus.
    std::vector<int> active_points;
    // Number of half-plane directions used; zero when the exact
    // interpolation path answered without a relaxation.
    int directions_used = 0;
};

/// Minimizes the max modulus of P over the samples of K subject to the
/// normalization constraint, over the span of the given monomials.
///
/// The modulus constraints are linearized over L = options.directions
/// half-planes and solved by cutting planes over a bounded-variable simplex,
/// so the reported value satisfies: true discrete minimax in
/// [value, value * sec(pi/L) + floor], where floor is an absolute
/// resolution limit of order 1e-8 times the data scale. When K is a
/// one-dimensional point set whose size equals the basis size (an
/// interpolation square), a closed-form exact solution is returned instead
/// unless options.force_lp is set.
MinimaxSolution minimax(const SampledSet& K, const std::vector<Monomial>& basis,
                        const MinimaxConstraint& constraint,
                        const MinimaxOptions& options = {});

struct MembershipOptions {
    double eps_member = 5e-3;  // value >= 1 - eps_member  -> member
    double eps_sep = 5e-2;     // value <= 1 - eps_sep     -> non-member
    MinimaxOptions minimax;
    bool want_certificate = true;
};

/// Decides membership of w (paired with w2 in dimension 2) in the
/// degree-bounded hull of the sampled set. Non-membership produces a
/// separating polynomial re-verified on a 10x denser resample when the set
/// carries a generator; a certificate that fails re-verification downgrades
/// the verdict to borderline.
MembershipVerdict membership_numeric(const SampledSet& K, cplx w, int degree,
                                     const MembershipOptions& options = {},
                                     cplx w2 = cplx(0.0, 0.0));

/// Axis-aligned bounding rectangle in the plane.
struct BBox {
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
};

/// Pointwise hull approximation over an inclusive grid of nodes.
struct HullGrid {
    BBox bbox;
    int nx = 0, ny = 0;
    std::vector<double> values;     // row-major, y index outer
    std::vector<Status> statuses;   // same layout

    std::size_t index(int ix, int iy) const {
        return static_cast<std::size_t>(iy) * nx + ix;
    }
};

/// Evaluates membership of every node of an nx-by-ny inclusive grid over
/// bbox in the degree-bounded hull of K (dimension 1 only). Nodes within
/// 1e-9 of a sample are members unconditionally. Cells are distributed
/// across workers; the result is independent of scheduling.
///
/// Requires nx, ny >= 2 and bbox to contain all samples.
HullGrid grid_hull(const SampledSet& K, int degree, const BBox& bbox, int nx, int ny,
                   const MembershipOptions& options = {});

}  // namespace hullbound
