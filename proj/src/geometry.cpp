#include "hullbound/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hullbound {

namespace {

// Index of the smallest value, lowest index winning ties.
size_t argmin(const std::vector<double>& v) {
    size_t best = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[best]) best = i;
    return best;
}

}  // namespace

bool AngleTable::all_pi(double tol) const {
    for (double s : sums)
        if (std::abs(s - pi) > tol) return false;
    return true;
}

AngleTable angle_table(const PointConfiguration& cfg, cplx w) {
    const ConvexPosition cp = convex_position(cfg);
    if (!cp.convex)
        throw std::runtime_error("angle_table: points not in convex position");
    const std::vector<cplx>& P = cp.order;
    const size_t m = P.size();
    const double scale = diameter(P);
    for (size_t i = 0; i < m; ++i)
        if (cross2(P[i], P[(i + 1) % m], w) <= 1e-12 * scale * scale)
            throw std::runtime_error("angle_table: query not interior");

    AngleTable t;
    t.alpha.assign(m, std::vector<double>(m, 0.0));
    t.beta.resize(m);
    t.sums.resize(m);
    for (size_t i = 0; i < m; ++i) {
        const cplx a = P[i], b = P[(i + 1) % m];
        t.beta[i] = angle_at(w, a, b);
        double s = t.beta[i];
        for (size_t j = 0; j < m; ++j) {
            if (j == i || j == (i + 1) % m) continue;
            t.alpha[i][j] = angle_at(P[j], a, b);
            s += t.alpha[i][j];
        }
        t.sums[i] = s;
    }
    return t;
}

double segment_condition(const PointConfiguration& cfg, std::size_t i, std::size_t j, cplx w) {
    const std::vector<cplx>& z = cfg.points;
    if (i >= z.size() || j >= z.size() || i == j)
        throw std::runtime_error("segment_condition: invalid segment indices");
    const double scale = diameter(z);
    const double eps = 1e-14 * scale * scale;

    std::vector<double> side(z.size(), 0.0);
    for (size_t k = 0; k < z.size(); ++k) {
        if (k == i || k == j) continue;
        side[k] = cross2(z[i], z[j], z[k]);
        if (std::abs(side[k]) <= eps)
            throw std::runtime_error("segment_condition: collinear witness");
    }
    // Reference side: w's own side, or (when w sits on the line) the side of
    // the first off-line witness so the two half-planes keep opposite signs.
    double ref = cross2(z[i], z[j], w);
    if (std::abs(ref) <= eps) {
        for (size_t k = 0; k < z.size(); ++k)
            if (k != i && k != j) { ref = side[k]; break; }
    }

    double value = angle_at(w, z[i], z[j]);
    for (size_t k = 0; k < z.size(); ++k) {
        if (k == i || k == j) continue;
        const double eps_k = (side[k] * ref > 0.0) ? 1.0 : -1.0;
        value += eps_k * angle_at(z[k], z[i], z[j]);
    }
    return value;
}

CircleSpec circle_for_gap(double phi_j, double phi_j1, int n) {
    if (n < 2) throw std::runtime_error("circle_for_gap: degree bound must be at least 2");
    const double gap = phi_j1 - phi_j;
    if (!(gap > 0.0) || !(gap < 2.0 * pi / (n - 1)))
        throw std::runtime_error("circle_for_gap: no interior locus");
    const double denom = std::sin((n - 1) * gap / 2.0);
    const double mid = (phi_j + phi_j1) / 2.0;
    CircleSpec c;
    c.center = (std::sin(n * gap / 2.0) / denom) * cplx(std::cos(mid), std::sin(mid));
    c.radius = std::sin(gap / 2.0) / denom;
    for (double phi : {phi_j, phi_j1}) {
        const cplx e(std::cos(phi), std::sin(phi));
        if (std::abs(std::abs(e - c.center) - c.radius) > 1e-12 * (1.0 + c.radius))
            throw std::runtime_error("circle_for_gap: endpoint postcondition failed");
    }
    return c;
}

std::optional<cplx> hull_point_unit_circle(const std::vector<double>& angles) {
    const size_t m = angles.size();
    if (m < 3)
        throw std::runtime_error("hull_point_unit_circle: need at least three angles");
    for (size_t k = 0; k < m; ++k) {
        if (angles[k] < 0.0 || angles[k] >= 2.0 * pi)
            throw std::runtime_error("hull_point_unit_circle: angles must lie in [0, 2*pi)");
        if (k + 1 < m && !(angles[k] < angles[k + 1]))
            throw std::runtime_error("hull_point_unit_circle: angles must be strictly increasing");
    }
    const int n = static_cast<int>(m) - 1;
    const double max_gap = 2.0 * pi / n;

    // All m circular gaps, including the closing arc back to the first point.
    std::vector<double> gaps(m);
    for (size_t k = 0; k + 1 < m; ++k) gaps[k] = angles[k + 1] - angles[k];
    gaps[m - 1] = 2.0 * pi - angles[m - 1] + angles[0];

    for (double g : gaps)
        if (g >= max_gap) return std::nullopt;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b)
            if (gaps[a] + gaps[b] <= max_gap) return std::nullopt;

    auto point = [&](size_t k) {
        const double phi = angles[k % m];
        return cplx(std::cos(phi), std::sin(phi));
    };
    // Unwrapped gap endpoints so circle_for_gap sees a positive width even
    // across the closing arc.
    auto gap_circle = [&](size_t g) {
        const double lo = angles[g % m];
        const double hi = lo + gaps[g % m];
        return circle_for_gap(lo, hi, n);
    };

    const size_t s = argmin(gaps);
    const CircleSpec c0 = gap_circle(s);
    const CircleSpec c1 = gap_circle(s + 1);
    if (std::abs(c1.center - c0.center) < 1e-14) return std::nullopt;

    // The circles already meet at the shared vertex; the hull candidate is
    // its mirror image across the line of centers.
    const cplx v = point(s + 1);
    const cplx d = (c1.center - c0.center) / std::abs(c1.center - c0.center);
    const cplx w = c0.center + d * d * std::conj(v - c0.center);

    for (size_t g = 0; g < m; ++g) {
        if (g == s || g == (s + 1) % m) continue;
        const CircleSpec c = gap_circle(g);
        if (std::abs(std::abs(w - c.center) - c.radius) > 1e-8) return std::nullopt;
    }

    // The candidate must lie in the closed triangle spanned by the smallest
    // gap's endpoints and the origin.
    const cplx a = point(s), b = point(s + 1);
    const double area = cross2(a, b, cplx(0.0, 0.0));
    const double u0 = cross2(a, b, w) / area;
    const double u1 = cross2(b, cplx(0.0, 0.0), w) / area;
    const double u2 = cross2(cplx(0.0, 0.0), a, w) / area;
    if (u0 < -1e-12 || u1 < -1e-12 || u2 < -1e-12) return std::nullopt;
    return w;
}

OrthocenterResult orthocenter(cplx a, cplx b, cplx c) {
    const double scale = std::max({std::abs(b - a), std::abs(c - a), std::abs(c - b)});
    if (std::abs(cross2(a, b, c)) <= 1e-14 * scale * scale)
        throw std::runtime_error("orthocenter: collinear points");
    // Two altitude conditions Re((h-a) conj(c-b)) = 0, Re((h-b) conj(c-a)) = 0
    // form a 2x2 linear system for h = x + iy.
    const cplx d1 = c - b, d2 = c - a;
    const double r1 = a.real() * d1.real() + a.imag() * d1.imag();
    const double r2 = b.real() * d2.real() + b.imag() * d2.imag();
    const double det = d1.real() * d2.imag() - d1.imag() * d2.real();
    OrthocenterResult out;
    out.point = cplx((r1 * d2.imag() - d1.imag() * r2) / det,
                     (d1.real() * r2 - r1 * d2.real()) / det);
    const double A = std::norm(b - c), B = std::norm(c - a), C = std::norm(a - b);
    out.acute = A < B + C && B < A + C && C < A + B;
    return out;
}

}  // namespace hullbound
