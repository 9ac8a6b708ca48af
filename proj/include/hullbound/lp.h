// Dense bounded-variable linear programming used by the minimax solver.
#pragma once

#include <vector>

namespace hullbound {

/// Optimal point of the box-constrained epigraph problem solved by
/// solve_min_t.
struct SimplexResult {
    std::vector<double> y;
    double t = 0.0;
};

/// Solves  min t  subject to  G y - t <= h  (componentwise),
/// |y_j| <= ybound, 0 <= t <= tmax, with dense G (rows x cols).
///
/// Uses a revised simplex method on the variable split y = u - v with
/// explicit basis inverse, Dantzig pricing with a Bland anti-cycling
/// fallback, and periodic refactorization. The start is primal feasible by
/// construction (y = 0, t = max(0, max(-h))), so no phase-1 is needed.
///
/// Throws std::runtime_error when tmax cannot absorb the initial violation,
/// when the basis becomes singular, or when the iteration cap is exceeded.
SimplexResult solve_min_t(const std::vector<std::vector<double>>& G,
                          const std::vector<double>& h, double ybound, double tmax);

}  // namespace hullbound
