#include "hullbound/experiments.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hullbound/geometry.h"

namespace hullbound {

namespace {

cplx unit(double phi) { return cplx(std::cos(phi), std::sin(phi)); }

// Gap width d > 0 such that the inscribed angle at w over the chord from
// e^{i phi} to e^{i (phi + dir*d)} equals the value pi - (n-1)d/2 required
// of every gap circle through w. Solved by scan-and-bisection on
// (0, 2*pi/n); no solution -> nullopt.
std::optional<double> chain_gap(cplx w, double phi, double dir, int n) {
    const double lo = 1e-9;
    const double hi = 2.0 * pi / n * (1.0 - 1e-13);
    auto f = [&](double d) {
        return angle_at(w, unit(phi), unit(phi + dir * d)) - (pi - (n - 1) * d / 2.0);
    };
    const int scan = 128;
    double prev_d = lo, prev_f = f(lo);
    for (int j = 1; j <= scan; ++j) {
        const double d = lo + (hi - lo) * j / scan;
        const double fd = f(d);
        if (prev_f == 0.0) return prev_d;
        if (prev_f * fd < 0.0) {
            double a = prev_d, b = d;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (a + b);
                if (f(mid) * f(a) <= 0.0)
                    b = mid;
                else
                    a = mid;
            }
            return 0.5 * (a + b);
        }
        prev_d = d;
        prev_f = fd;
    }
    return std::nullopt;
}

}  // namespace

std::optional<ArcWitness> arc_nonconvexity_witness(int n, double alpha) {
    if (n < 2) throw std::runtime_error("arc_nonconvexity_witness: n must be at least 2");
    if (!(alpha > 0.0) || !(alpha < pi))
        throw std::runtime_error("arc_nonconvexity_witness: alpha must lie in (0, pi)");

    const double g0_start =
        std::min(2.0 * alpha / (10.0 * n), 2.0 * alpha - 0.99 * (n - 1) * 2.0 * pi / n);
    if (g0_start <= 0.0) return std::nullopt;  // schedule cannot fit inside the arc

    for (int retry = 0; retry < 60; ++retry) {
        const double g0 = g0_start / std::pow(2.0, retry);
        // Candidate hull point for the symmetric small gap (-g0/2, g0/2):
        // the near intersection of that gap's circle with the real axis.
        const cplx w0(std::cos((n + 1) * g0 / 4.0) / std::cos((n - 1) * g0 / 4.0), 0.0);

        std::vector<double> phis{-g0 / 2.0, g0 / 2.0};
        const int ccw_steps = n / 2;
        bool ok = true;
        for (int step = 0; step < n - 1 && ok; ++step) {
            const bool ccw = step < ccw_steps;
            const double from = ccw ? phis.back() : phis.front();
            const auto d = chain_gap(w0, from, ccw ? 1.0 : -1.0, n);
            if (!d) {
                ok = false;
                break;
            }
            if (ccw)
                phis.push_back(from + *d);
            else
                phis.insert(phis.begin(), from - *d);
        }
        if (!ok) continue;
        const double span = phis.back() - phis.front();
        if (span > 2.0 * alpha) continue;

        // Recenter the configuration on the arc midline; the hull point
        // follows by rotation equivariance.
        const double shift = 0.5 * (phis.front() + phis.back());
        for (double& phi : phis) phi -= shift;

        std::vector<double> wrapped = phis;
        for (double& phi : wrapped)
            if (phi < 0.0) phi += 2.0 * pi;
        std::sort(wrapped.begin(), wrapped.end());
        std::optional<cplx> w;
        try {
            w = hull_point_unit_circle(wrapped);
        } catch (const std::runtime_error&) {
            continue;  // duplicate/degenerate angles at this g0
        }
        if (!w) continue;

        std::vector<cplx> pts;
        pts.reserve(phis.size());
        for (double phi : phis) pts.push_back(unit(phi));
        PointConfiguration cfg(pts);
        const MembershipVerdict verdict = membership_exact(cfg, *w, 1e-9);
        if (verdict.status != Status::member) continue;

        ArcWitness witness{std::move(cfg), *w, verdict.residual, g0, std::move(phis)};
        return witness;
    }
    return std::nullopt;
}

QuadraticSeparation quadratic_arc_separation(double alpha, double r, double phi, int N) {
    if (!(alpha > 0.0) || !(alpha < pi / 4.0))
        throw std::runtime_error("quadratic_arc_separation: alpha must lie in (0, pi/4)");
    if (!(r > 0.0) || !(r < 1.0))
        throw std::runtime_error("quadratic_arc_separation: r must lie in (0, 1)");
    if (std::abs(phi) > alpha)
        throw std::runtime_error("quadratic_arc_separation: |phi| must not exceed alpha");

    const SampledSet arc = arc_samples(alpha, N);
    const cplx point = r * unit(phi);
    const cplx e1 = unit(phi), e2 = unit(2.0 * phi);

    for (int k = 0; k <= 15; ++k) {
        const double a = std::pow(2.0, k);
        Poly1 p(std::vector<cplx>{e2 * (a * a + 1.0), -2.0 * e1, cplx(1.0, 0.0)});
        const double sup = sup_norm(p, arc);
        const double at_point = std::abs(eval1(p, point));
        if (at_point > sup) {
            QuadraticSeparation out;
            out.p = std::move(p);
            out.a = a;
            out.ratio = at_point / sup;
            out.margin = at_point - sup;
            return out;
        }
    }
    std::ostringstream msg;
    msg << "quadratic_arc_separation: no separating a up to 2^15 (alpha=" << alpha
        << ", r=" << r << ", phi=" << phi << ")";
    throw std::runtime_error(msg.str());
}

std::vector<cplx> PathologicalCurveSpec::ring_spread_points(int n) {
    std::vector<cplx> pts;
    pts.reserve(2 * n + 2);
    for (int k = 0; k < 2 * n + 2; ++k) {
        const double theta = pi * (2.0 * k + 1.0) / (2.0 * (n + 1.0));
        pts.push_back(ring_center(n) + ring_radius(n) * unit(theta));
    }
    return pts;
}

MembershipVerdict pathological_membership(const PathologicalCurveSpec& spec, int n) {
    if (n < 1 || n > spec.n_max)
        throw std::runtime_error("pathological_membership: n out of range");
    PointConfiguration cfg(PathologicalCurveSpec::ring_spread_points(n));
    return membership_exact(cfg, cplx(PathologicalCurveSpec::ring_center(n), 0.0), 1e-9);
}

ChebyshevReport chebyshev_symmetry_check(const SampledSet& A, int n,
                                         const MinimaxOptions& options) {
    A.validate();
    if (A.dimension != 1)
        throw std::runtime_error("chebyshev_symmetry_check: planar sets only");
    if (n < 1) throw std::runtime_error("chebyshev_symmetry_check: n must be positive");
    for (const cplx& z : A.points1) {
        bool mirrored = false;
        for (const cplx& y : A.points1)
            if (std::abs(y - std::conj(z)) <= 1e-12) {
                mirrored = true;
                break;
            }
        if (!mirrored)
            throw std::runtime_error("chebyshev_symmetry_check: asymmetric input");
    }
    for (int k = 0; k <= n; ++k) {
        const cplx root = unit(2.0 * pi * k / (n + 1));
        bool found = false;
        for (const cplx& z : A.points1)
            if (std::abs(z - root) <= 1e-9) {
                found = true;
                break;
            }
        if (!found)
            throw std::runtime_error(
                "chebyshev_symmetry_check: equally spread points not contained");
    }

    ChebyshevReport report;
    report.solution = minimax(A, monomial_basis(1, n), MinimaxConstraint::monic(), options);
    if (std::abs(report.solution.value - 1.0) > 5e-3)
        throw std::runtime_error("chebyshev_symmetry_check: optimum deviates from 1");
    double dist2 = 0.0;
    for (size_t m = 0; m < report.solution.coefficients.size(); ++m) {
        const cplx target =
            m + 1 == report.solution.coefficients.size() ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
        dist2 += std::norm(report.solution.coefficients[m] - target);
    }
    report.coeff_distance = std::sqrt(dist2);
    return report;
}

double jacobian_constant_check(const std::vector<cplx>& points) {
    const size_t n = points.size();
    if (n < 2) throw std::runtime_error("jacobian_constant_check: need at least two points");
    for (size_t k = 0; k < n; ++k) {
        if (points[k] == cplx(0.0, 0.0) || points[k] == cplx(1.0, 0.0))
            throw std::runtime_error("jacobian_constant_check: points must avoid 0 and 1");
        for (size_t j = k + 1; j < n; ++j)
            if (points[k] == points[j])
                throw std::runtime_error("jacobian_constant_check: coincident points");
    }
    std::vector<cplx> M(n * n);
    for (size_t k = 0; k < n; ++k) {
        cplx diag(1.0, 0.0);
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const cplx ratio = points[k] / (points[k] - points[j]);
            diag += ratio;
            M[k * n + j] = ratio - points[k] / (points[k] - cplx(1.0, 0.0));
        }
        M[k * n + k] = diag;
    }
    // LU with partial pivoting; the determinant is the pivot product.
    cplx det(1.0, 0.0);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r)
            if (std::abs(M[r * n + c]) > std::abs(M[piv * n + c])) piv = r;
        if (std::abs(M[piv * n + c]) == 0.0) return 0.0;
        if (piv != c) {
            for (size_t j = c; j < n; ++j) std::swap(M[piv * n + j], M[c * n + j]);
            det = -det;
        }
        det *= M[c * n + c];
        for (size_t r = c + 1; r < n; ++r) {
            const cplx f = M[r * n + c] / M[c * n + c];
            for (size_t j = c; j < n; ++j) M[r * n + j] -= f * M[c * n + j];
        }
    }
    return det.real();
}

}  // namespace hullbound
