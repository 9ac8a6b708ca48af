#include "hullbound/poly.h"

#include <algorithm>

namespace hullbound {

std::optional<int> Poly2::degree() const {
    std::optional<int> deg;
    for (int t = 0; t <= max_degree; ++t)
        for (int i = t; i >= 0; --i)
            if (at(i, t - i) != cplx(0.0, 0.0)) deg = t;
    return deg;
}

void SampledSet::validate() const {
    if (dimension != 1 && dimension != 2)
        throw std::runtime_error("SampledSet: dimension must be 1 or 2");
    if (size() == 0) throw std::runtime_error("SampledSet: empty sample set");
    if (dimension == 1) {
        if (!points2.empty())
            throw std::runtime_error("SampledSet: dimension mismatch in storage");
        for (const cplx& z : points1)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::runtime_error("SampledSet: non-finite sample");
    } else {
        if (!points1.empty())
            throw std::runtime_error("SampledSet: dimension mismatch in storage");
        for (const auto& [z, w] : points2)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
                !std::isfinite(w.real()) || !std::isfinite(w.imag()))
                throw std::runtime_error("SampledSet: non-finite sample");
    }
}

cplx eval1(const Poly1& p, cplx z) {
    cplx acc(0.0, 0.0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx eval2(const Poly2& p, cplx z, cplx w) {
    // Horner over z of inner Horner polynomials in w: P = sum_i z^i q_i(w).
    cplx acc(0.0, 0.0);
    for (int i = p.max_degree; i >= 0; --i) {
        cplx qi(0.0, 0.0);
        for (int j = p.max_degree - i; j >= 0; --j) qi = qi * w + p.at(i, j);
        acc = acc * z + qi;
    }
    return acc;
}

std::vector<Monomial> monomial_basis(int dimension, int degree) {
    if (degree < 0) throw std::runtime_error("monomial_basis: negative degree");
    if (dimension != 1 && dimension != 2)
        throw std::runtime_error("monomial_basis: dimension must be 1 or 2");
    std::vector<Monomial> out;
    if (dimension == 1) {
        out.reserve(static_cast<size_t>(degree) + 1);
        for (int k = 0; k <= degree; ++k) out.push_back({k, 0});
    } else {
        out.reserve(static_cast<size_t>((degree + 1) * (degree + 2) / 2));
        for (int t = 0; t <= degree; ++t)
            for (int i = t; i >= 0; --i) out.push_back({i, t - i});
    }
    return out;
}

double sup_norm(const Poly1& p, const SampledSet& K) {
    K.validate();
    if (K.dimension != 1)
        throw std::runtime_error("sup_norm: univariate polynomial on a dimension-2 set");
    double m = 0.0;
    for (const cplx& z : K.points1) m = std::max(m, std::abs(eval1(p, z)));
    return m;
}

double sup_norm(const Poly2& p, const SampledSet& K) {
    K.validate();
    if (K.dimension != 2)
        throw std::runtime_error("sup_norm: bivariate polynomial on a dimension-1 set");
    double m = 0.0;
    for (const auto& [z, w] : K.points2) m = std::max(m, std::abs(eval2(p, z, w)));
    return m;
}

SampledSet points_set(std::vector<cplx> pts) {
    SampledSet K;
    K.dimension = 1;
    K.points1 = std::move(pts);
    K.generator = "points N=" + std::to_string(K.points1.size());
    K.density_hint = static_cast<double>(K.points1.size());
    K.validate();
    return K;
}

SampledSet circle_samples(int N) {
    if (N < 1) throw std::runtime_error("circle_samples: N must be positive");
    SampledSet K;
    K.dimension = 1;
    K.points1.reserve(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        const double t = 2.0 * pi * k / N;
        K.points1.emplace_back(std::cos(t), std::sin(t));
    }
    K.generator = "circle N=" + std::to_string(N);
    K.density_hint = N / (2.0 * pi);
    K.densify = [N](int factor) { return circle_samples(N * factor); };
    return K;
}

SampledSet arc_samples(double alpha, int N) {
    if (!(alpha > 0.0) || !(alpha < pi))
        throw std::runtime_error("arc_samples: alpha must lie in (0, pi)");
    if (N < 2) throw std::runtime_error("arc_samples: N must be at least 2");
    SampledSet K;
    K.dimension = 1;
    K.points1.reserve(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        const double t = -alpha + 2.0 * alpha * k / (N - 1);
        K.points1.emplace_back(std::cos(t), std::sin(t));
    }
    K.generator = "arc alpha=" + std::to_string(alpha) + " N=" + std::to_string(N);
    K.density_hint = N / (2.0 * alpha);
    K.densify = [alpha, N](int factor) { return arc_samples(alpha, N * factor); };
    return K;
}

SampledSet segment_samples(cplx a, cplx b, int N) {
    if (N < 2) throw std::runtime_error("segment_samples: N must be at least 2");
    SampledSet K;
    K.dimension = 1;
    K.points1.reserve(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        const double t = static_cast<double>(k) / (N - 1);
        K.points1.push_back(a + (b - a) * t);
    }
    K.generator = "segment N=" + std::to_string(N);
    K.density_hint = N / std::max(std::abs(b - a), 1e-300);
    K.densify = [a, b, N](int factor) { return segment_samples(a, b, N * factor); };
    return K;
}

}  // namespace hullbound
