// Shared numeric primitives: the complex scalar type, pi, and the small
// angle/orientation helpers every geometric routine leans on.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hullbound {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi_v<double>;

// Unsigned angle at `w` subtended by the segment (a, b), folded to [0, pi].
// Computed as the principal argument of a difference-vector ratio, which is
// robust near collinearity (no explicit acos of a dot product).
inline double angle_at(cplx w, cplx a, cplx b) {
    return std::abs(std::arg((b - w) / (a - w)));
}

// Twice the signed area of the triangle (a, b, c); > 0 for counterclockwise.
inline double cross2(cplx a, cplx b, cplx c) {
    const cplx u = b - a, v = c - a;
    return u.real() * v.imag() - u.imag() * v.real();
}

// Largest pairwise distance of a point set (0 for fewer than two points).
inline double diameter(const std::vector<cplx>& pts) {
    double d = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, std::abs(pts[i] - pts[j]));
    return d;
}

}  // namespace hullbound
