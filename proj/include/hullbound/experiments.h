// Unit-circle arc studies, the nowhere-finitely-convex pathological curve,
// the monic Chebyshev property, and the generic-configuration Jacobian check.
#pragma once

#include <optional>
#include <vector>

#include "hullbound/cheb.h"
#include "hullbound/exact_hull.h"
#include "hullbound/verdict.h"

namespace hullbound {

/// A verified non-convexity witness inside the arc A_alpha: n+1 points on
/// the unit circle within |arg z| <= alpha whose degree-n hull contains w.
struct ArcWitness {
    PointConfiguration config;
    cplx w;
    double residual = 0.0;          // relative alignment residual at w
    double g0 = 0.0;                // realized small gap of the schedule
    std::vector<double> angles;     // point angles, ascending, centered on 0
};

/// Attempts to construct a witness that A_alpha is not degree-n convex by
/// clustering one small gap g0 and chaining the remaining gaps toward
/// 2*pi/n. A pair is returned only when the exact oracle confirms the
/// candidate with residual below 1e-9; expected to succeed precisely when
/// alpha exceeds (n-1)*pi/n. Requires n >= 2 and alpha in (0, pi).
std::optional<ArcWitness> arc_nonconvexity_witness(int n, double alpha);

/// First-success quadratic separation of an interior point from the arc.
struct QuadraticSeparation {
    Poly1 p;            // z^2 - 2 e^{i phi} z + e^{2 i phi} (a^2 + 1)
    double a = 0.0;     // successful shift parameter (doubling search)
    double ratio = 0.0;   // |p(r e^{i phi})| / sup over arc samples
    double margin = 0.0;  // |p(r e^{i phi})| - sup over arc samples
};

/// Searches a in {1, 2, 4, ..., 2^15} for the first quadratic of the family
/// above whose value at r e^{i phi} strictly exceeds its sup norm over
/// arc_samples(alpha, N). Requires 0 < alpha < pi/4, 0 < r < 1,
/// |phi| <= alpha; throws when the search is exhausted.
QuadraticSeparation quadratic_arc_separation(double alpha, double r, double phi,
                                             int N = 513);

/// The curve built from shrinking circles: ring n is centered at 1/n with
/// radius 1/(2n^2), carries 2n+2 equally spread marked points at angles
/// pi(2k+1)/(2(n+1)), and has open arcs of half-angle pi/(2(n+1)) removed
/// around both horizontal crossings where the connectors attach. Connector
/// shape never enters the membership mathematics.
struct PathologicalCurveSpec {
    int n_max = 2;

    explicit PathologicalCurveSpec(int n_max_) : n_max(n_max_) {
        if (n_max < 2)
            throw std::runtime_error("PathologicalCurveSpec: n_max must be at least 2");
    }

    static double ring_center(int n) { return 1.0 / n; }
    static double ring_radius(int n) { return 1.0 / (2.0 * n * n); }
    static double removed_half_angle(int n) { return pi / (2.0 * (n + 1)); }
    /// The 2n+2 marked points of ring n.
    static std::vector<cplx> ring_spread_points(int n);
};

/// Exact-oracle membership of w = 1/n in the degree-(2n+1) hull of ring n's
/// marked points; member for every n >= 1 since the marked points are an
/// affine image of equally spread points on a circle.
MembershipVerdict pathological_membership(const PathologicalCurveSpec& spec, int n);

/// Monic minimax report for conjugation-symmetric circle subsets containing
/// the (n+1)-st roots of unity.
struct ChebyshevReport {
    MinimaxSolution solution;
    // Euclidean distance of the coefficient vector from the pure monomial.
    double coeff_distance = 0.0;
};

/// Runs the monic degree-n minimax over A and checks that the optimum is 1
/// within 5e-3 (the pure power is optimal on such sets). Throws on input
/// that is not conjugation-symmetric to 1e-12, on missing roots of unity
/// (1e-9), or when the optimum assertion fails.
ChebyshevReport chebyshev_symmetry_check(const SampledSet& A, int n,
                                         const MinimaxOptions& options = {});

/// Determinant of the n-by-n matrix with diagonal sum_{j != k} z_k/(z_k-z_j) + 1
/// and off-diagonal z_k/(z_k-z_j) - z_k/(z_k-1); equals n! for every
/// admissible configuration. Requires n >= 2, points pairwise distinct and
/// avoiding {0, 1}.
double jacobian_constant_check(const std::vector<cplx>& points);

}  // namespace hullbound
