#include "hullbound/exact_hull.h"

#include <algorithm>
#include <array>
#include <limits>

namespace hullbound {

namespace {

// Precomputed w-independent part of the alignment numbers: the log-magnitude
// and total argument of prod_{j != i}(z_i - z_j). Evaluating a query point is
// then O(n) instead of O(n^2).
struct AlignmentKernel {
    const std::vector<cplx>& pts;
    std::vector<double> logm0, ang0;
    double diam;

    explicit AlignmentKernel(const std::vector<cplx>& p) : pts(p) {
        const size_t m = p.size();
        logm0.assign(m, 0.0);
        ang0.assign(m, 0.0);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                if (j != i) {
                    const cplx d = p[i] - p[j];
                    logm0[i] += std::log(std::abs(d));
                    ang0[i] += std::arg(d);
                }
        diam = diameter(p);
    }

    bool coincident(cplx w) const {
        const double thr = 1e-14 * diam;
        for (const cplx& z : pts)
            if (std::abs(w - z) <= thr) return true;
        return false;
    }

    AlignmentReport report(cplx w) const {
        const size_t m = pts.size();
        std::vector<double> logm(m), ang(m);
        double logmax = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < m; ++i) {
            const cplx d = pts[i] - w;
            logm[i] = logm0[i] + std::log(std::abs(d));
            ang[i] = ang0[i] + std::arg(d);
            logmax = std::max(logmax, logm[i]);
        }
        AlignmentReport rep;
        rep.log_scale = logmax;
        rep.values.resize(m);
        cplx total(0.0, 0.0);
        double sum_abs = 0.0;
        for (size_t i = 0; i < m; ++i) {
            const double r = std::exp(logm[i] - logmax);
            rep.values[i] = cplx(r * std::cos(ang[i]), r * std::sin(ang[i]));
            total += rep.values[i];
            sum_abs += r;
        }
        rep.residual = sum_abs - std::abs(total);
        if (rep.residual < 0.0) rep.residual = 0.0;  // guard rounding
        return rep;
    }

    // Relative residual, +inf when w collides with a configuration point.
    double rel(cplx w) const {
        if (coincident(w)) return std::numeric_limits<double>::infinity();
        const AlignmentReport rep = report(w);
        return rep.residual / rep.sum_abs();
    }
};

// Derivative-free Nelder-Mead on f : R^2 -> R with fixed parameters; fully
// deterministic for a fixed start.
template <typename F>
std::pair<cplx, double> nelder_mead(const F& f, cplx start, double step, int iters) {
    std::array<cplx, 3> x{start, start + cplx(step, 0.0), start + cplx(0.0, step)};
    std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};
    auto order = [&]() {
        // insertion sort of the three vertices by value
        for (int a = 0; a < 2; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (fx[b] < fx[a]) {
                    std::swap(fx[a], fx[b]);
                    std::swap(x[a], x[b]);
                }
    };
    order();
    for (int it = 0; it < iters; ++it) {
        if (std::abs(x[0] - x[1]) + std::abs(x[0] - x[2]) < 1e-15 * (1.0 + std::abs(x[0])))
            break;
        const cplx c = 0.5 * (x[0] + x[1]);  // centroid of the two best
        const cplx xr = c + (c - x[2]);
        const double fr = f(xr);
        if (fr < fx[0]) {
            const cplx xe = c + 2.0 * (c - x[2]);
            const double fe = f(xe);
            if (fe < fr) { x[2] = xe; fx[2] = fe; }
            else { x[2] = xr; fx[2] = fr; }
        } else if (fr < fx[1]) {
            x[2] = xr; fx[2] = fr;
        } else {
            const cplx xc = c + 0.5 * ((fr < fx[2] ? xr : x[2]) - c);
            const double fc = f(xc);
            if (fc < std::min(fr, fx[2])) { x[2] = xc; fx[2] = fc; }
            else {
                // shrink toward the best vertex
                x[1] = x[0] + 0.5 * (x[1] - x[0]);
                x[2] = x[0] + 0.5 * (x[2] - x[0]);
                fx[1] = f(x[1]);
                fx[2] = f(x[2]);
            }
        }
        order();
    }
    return {x[0], fx[0]};
}

// Circle of points that see the segment (a, b) at inscribed angle beta from
// its left side (counterclockwise interior). Valid for beta in (0, pi).
struct EdgeCircle {
    cplx center;
    double radius;
};
EdgeCircle inscribed_circle(cplx a, cplx b, double beta) {
    const cplx mid = 0.5 * (a + b);
    const double half = 0.5 * std::abs(b - a);
    const cplx normal = cplx(0.0, 1.0) * (b - a) / std::abs(b - a);
    return {mid + normal * (half / std::tan(beta)), half / std::sin(beta)};
}

}  // namespace

PointConfiguration::PointConfiguration(std::vector<cplx> pts) : points(std::move(pts)) {
    if (points.size() < 2)
        throw std::runtime_error("PointConfiguration: at least two points required");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::runtime_error("PointConfiguration: repeated points");
}

AlignmentReport alignment_values(const PointConfiguration& cfg, cplx w) {
    AlignmentKernel k(cfg.points);
    if (k.coincident(w))
        throw std::runtime_error("alignment_values: coincident query point");
    return k.report(w);
}

MembershipVerdict membership_exact(const PointConfiguration& cfg, cplx w, double tol) {
    if (!(tol > 0.0)) throw std::runtime_error("membership_exact: tol must be positive");
    const AlignmentReport rep = alignment_values(cfg, w);
    const double rel = rep.residual / rep.sum_abs();
    MembershipVerdict v;
    v.residual = rel;
    v.w = w;
    v.dimension = 1;
    v.degree_bound = cfg.n();
    if (rel <= tol) v.status = Status::member;
    else if (rel <= 100.0 * tol) v.status = Status::borderline;
    else v.status = Status::non_member;
    return v;
}

ConvexPosition convex_position(const PointConfiguration& cfg) {
    ConvexPosition out;
    std::vector<cplx> p = cfg.points;
    std::sort(p.begin(), p.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    const double scale = diameter(p);
    const double eps = 1e-12 * scale * scale;
    // Andrew monotone chain keeping only strict turns, so collinear or
    // interior points are dropped and the vertex count detects them.
    auto build = [&](std::vector<cplx>& hull, auto begin, auto end) {
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= 2 &&
                   cross2(hull[hull.size() - 2], hull.back(), *it) <= eps)
                hull.pop_back();
            hull.push_back(*it);
        }
    };
    std::vector<cplx> lower, upper;
    build(lower, p.begin(), p.end());
    build(upper, p.rbegin(), p.rend());
    lower.pop_back();
    upper.pop_back();
    std::vector<cplx> hull = lower;
    hull.insert(hull.end(), upper.begin(), upper.end());
    out.convex = hull.size() == cfg.points.size();
    if (out.convex) out.order = hull;  // counterclockwise from the lex-least point
    return out;
}

HullPointSearch hull_point_search(const PointConfiguration& cfg, double tol) {
    if (cfg.n() < 2)
        throw std::runtime_error("hull_point_search: need at least three points");
    HullPointSearch out;
    out.min_residual = std::numeric_limits<double>::infinity();
    AlignmentKernel kernel(cfg.points);
    // Configuration points are hull members trivially (their alignment value
    // vanishes); the search is for an *extra* point, so a disk around each
    // input point is excluded from the domain. Without this, descent on a
    // right triangle dives into the right-angle vertex, where the remaining
    // alignment values are exactly parallel and the residual decays like the
    // squared distance — the radius is sized so the residual floor on the
    // exclusion boundary stays far above the acceptance tolerance.
    auto near_config = [&](cplx w) {
        for (const cplx& z : cfg.points)
            if (std::abs(w - z) <= 1e-4 * kernel.diam) return true;
        return false;
    };
    auto f = [&](cplx w) {
        return near_config(w) ? std::numeric_limits<double>::infinity() : kernel.rel(w);
    };

    const ConvexPosition cp = convex_position(cfg);
    if (cp.convex) {
        const std::vector<cplx>& P = cp.order;
        const size_t m = P.size();
        // Required inscribed angle over edge i follows from the angles the
        // remaining vertices subtend over that edge.
        auto required_beta = [&](size_t i) {
            double s = 0.0;
            for (size_t j = 0; j < m; ++j)
                if (j != i && j != (i + 1) % m)
                    s += angle_at(P[j], P[i], P[(i + 1) % m]);
            return pi - s;
        };
        const double b0 = required_beta(0), b1 = required_beta(1);
        const double ang_eps = 1e-12;
        if (b0 > ang_eps && b0 < pi - ang_eps && b1 > ang_eps && b1 < pi - ang_eps) {
            const EdgeCircle c0 = inscribed_circle(P[0], P[1], b0);
            const EdgeCircle c1 = inscribed_circle(P[1], P[2], b1);
            if (std::abs(c1.center - c0.center) > 1e-12 * kernel.diam) {
                // Both circles pass through the shared vertex P[1]; the other
                // intersection is its mirror image across the center line.
                const cplx d = (c1.center - c0.center) / std::abs(c1.center - c0.center);
                const cplx w = c0.center + d * d * std::conj(P[1] - c0.center);
                const double rel = f(w);
                out.min_residual = std::min(out.min_residual, rel);
                if (rel <= tol) {
                    out.w = w;
                    out.residual = rel;
                    out.method = "circle";
                    out.minima.push_back(w);
                    return out;
                }
            }
        }
    }

    // Deterministic multi-start derivative-free descent on the residual.
    cplx centroid(0.0, 0.0);
    for (const cplx& z : cfg.points) centroid += z;
    centroid /= static_cast<double>(cfg.size());
    double R = 0.0;
    for (const cplx& z : cfg.points) R = std::max(R, std::abs(z - centroid));

    std::vector<cplx> starts{centroid};
    for (int k = 0; k < 8; ++k) {
        const double t = 2.0 * pi * k / 8.0;
        starts.push_back(centroid + 0.35 * R * cplx(std::cos(t), std::sin(t)));
    }
    cplx best_w = centroid;
    double best_f = std::numeric_limits<double>::infinity();
    for (const cplx& s : starts) {
        const auto [w, fw] = nelder_mead(f, s, 0.1 * R, 200);
        out.min_residual = std::min(out.min_residual, fw);
        if (fw <= tol) {
            bool fresh = true;
            for (const cplx& m0 : out.minima)
                if (std::abs(m0 - w) <= 1e-6 * R) fresh = false;
            if (fresh) out.minima.push_back(w);
        }
        const bool better =
            fw < best_f - 1e-15 ||
            (std::abs(fw - best_f) <= 1e-15 &&
             (w.real() < best_w.real() ||
              (w.real() == best_w.real() && w.imag() < best_w.imag())));
        if (better) {
            best_f = fw;
            best_w = w;
        }
    }
    out.method = "descent";
    if (best_f <= tol) {
        out.w = best_w;
        out.residual = best_f;
    }
    return out;
}

}  // namespace hullbound
