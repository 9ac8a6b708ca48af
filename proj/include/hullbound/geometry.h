// Angle-sum membership criteria, inscribed-angle circle constructions (in the
// plane and specialized to points on the unit circle), the orthocenter solver
// for the three-point degree-2 case, and quick convexity tests for circular
// point configurations.
#pragma once

#include <optional>
#include <vector>

#include "hullbound/common.h"
#include "hullbound/exact_hull.h"

namespace hullbound {

/// A circle in the plane.
struct CircleSpec {
    cplx center;
    double radius = 0.0;  // finite and positive
};

/// Angle bookkeeping for a convex configuration and a query point w.
///
/// Indices refer to the counterclockwise convex ordering of the points
/// (see convex_position), with edges (P_i, P_{i+1 mod m}) for i = 0..m-1.
/// alpha[i][j] is the angle at P_j in the triangle (P_i, P_{i+1}, P_j) for
/// j distinct from i and i+1 (other slots hold zero); beta[i] is the angle
/// at w in the triangle (P_i, P_{i+1}, w); sums[i] = beta[i] + sum_j
/// alpha[i][j]. The query point belongs to the degree-n hull exactly when
/// every sum equals pi; summing over all edges always yields (n+1)*pi for
/// interior w.
struct AngleTable {
    std::vector<std::vector<double>> alpha;
    std::vector<double> beta;
    std::vector<double> sums;

    /// True when every sum is within tol of pi.
    bool all_pi(double tol = 1e-8) const;
};

/// Computes the angle table for a convex-position configuration and a query
/// point strictly inside the polygon.
///
/// Throws std::runtime_error "query not interior" when w lies outside or on
/// the polygon boundary, and when the points are not in convex position.
AngleTable angle_table(const PointConfiguration& cfg, cplx w);

/// Signed angle-sum condition across the segment (z_i, z_j): returns
/// beta + sum_k eps_k * alpha_k where beta is the angle at w over the
/// segment, alpha_k the angle at z_k over the segment, and eps_k = +1
/// exactly when z_k lies on w's side of the line through z_i and z_j.
/// When w is on the line itself, signs are taken relative to the first
/// off-line witness point by index. Membership of w requires the value pi
/// for every segment choice.
///
/// Throws std::runtime_error "collinear witness" when some other
/// configuration point lies on the line through z_i and z_j.
double segment_condition(const PointConfiguration& cfg, std::size_t i, std::size_t j, cplx w);

/// Circle of points that see the chord between e^{i phi_j} and e^{i phi_j1}
/// at the inscribed angle pi - (n-1)*(phi_j1 - phi_j)/2. Center has modulus
/// sin(n*D/2)/sin((n-1)*D/2) in direction (phi_j + phi_j1)/2 and the radius
/// is sin(D/2)/sin((n-1)*D/2), with D the gap width.
///
/// Requires n >= 2 and 0 < D < 2*pi/(n-1); otherwise throws
/// std::runtime_error "no interior locus".
CircleSpec circle_for_gap(double phi_j, double phi_j1, int n);

/// Decides whether n+1 points e^{i phi_k} on the unit circle admit an extra
/// point in their degree-n hull and constructs it when they do.
///
/// angles must be strictly increasing in [0, 2*pi) with at least three
/// entries. Returns the hull point, or nothing when the configuration is
/// polynomially convex at this degree (any circular gap at least 2*pi/n, or
/// two distinct circular gaps with sum at most 2*pi/n, or the circle
/// intersection fails verification).
std::optional<cplx> hull_point_unit_circle(const std::vector<double>& angles);

/// Orthocenter of a nondegenerate triangle together with its acuteness.
/// The degree-2 hull of three points gains an extra point exactly when the
/// triangle is acute, and that point is the orthocenter.
struct OrthocenterResult {
    cplx point;
    bool acute = false;
};

/// Throws std::runtime_error on (numerically) collinear input.
OrthocenterResult orthocenter(cplx a, cplx b, cplx c);

}  // namespace hullbound
