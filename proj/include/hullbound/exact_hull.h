// Exact membership oracle for the degree-n polynomial hull of n+1 distinct
// points: a query point belongs to the hull precisely when the alignment
// numbers t_i = (z_i - w) * prod_{j != i} (z_i - z_j) all lie on one real
// half-line from the origin. Also hosts the search for the (unique, when it
// exists) extra hull point of a configuration.
#pragma once

#include "hullbound/verdict.h"

namespace hullbound {

// A finite configuration of pairwise-distinct points z_0..z_n.
struct PointConfiguration {
    std::vector<cplx> points;

    PointConfiguration() = default;
    explicit PointConfiguration(std::vector<cplx> pts);

    int n() const { return static_cast<int>(points.size()) - 1; }
    size_t size() const { return points.size(); }
};

// Normalized alignment numbers and the ray-alignment defect.
// values[i] is proportional to (z_i - w) * prod_{j != i}(z_i - z_j),
// rescaled so the largest modulus is exactly 1; log_scale is the common
// log-magnitude that was factored out. residual = sum|v_i| - |sum v_i| is
// zero precisely when all values share one ray.
struct AlignmentReport {
    std::vector<cplx> values;
    double residual = 0.0;
    double log_scale = 0.0;

    double sum_abs() const {
        double s = 0.0;
        for (const cplx& v : values) s += std::abs(v);
        return s;
    }
    // Dimensionless defect in [0, 2]; the membership tests threshold this.
    double relative_residual() const { return residual / sum_abs(); }
};

// Computes the alignment numbers in log-magnitude/argument form (the raw
// products overflow for a few dozen points). Throws "coincident query point"
// if w is within 1e-14 of a configuration point relative to the diameter.
AlignmentReport alignment_values(const PointConfiguration& cfg, cplx w);

// Membership of w in the degree-n hull of the n+1 configuration points.
// member when the relative residual is <= tol, borderline in (tol, 100 tol].
MembershipVerdict membership_exact(const PointConfiguration& cfg, cplx w,
                                   double tol = 1e-9);

// Convex-position test: true iff every point is an extreme point of the
// convex hull (collinear triples fail). On success `order` holds all points
// in counterclockwise order starting from the lexicographically least.
struct ConvexPosition {
    bool convex = false;
    std::vector<cplx> order;
};
ConvexPosition convex_position(const PointConfiguration& cfg);

// Outcome of the extra-hull-point search.
struct HullPointSearch {
    std::optional<cplx> w;          // the hull point, when one was confirmed
    double residual = 0.0;          // relative residual at w (when found)
    double min_residual = 0.0;      // smallest relative residual encountered
    std::string method;             // "circle" or "descent"
    std::vector<cplx> minima;       // all sub-tolerance minima found
};

// Finds w with relative alignment residual <= tol if one exists.
// Strategy: for configurations in convex position, intersect the two
// inscribed-angle circles over the first two polygon edges (required angles
// beta_i = pi - sum_j alpha_{i,j}) and verify; otherwise, or on verification
// failure, run a deterministic multi-start derivative-free descent on the
// residual over the convex hull and accept only sub-tolerance minima.
HullPointSearch hull_point_search(const PointConfiguration& cfg, double tol = 1e-9);

}  // namespace hullbound
