#include "hullbound/c2.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace hullbound {

KnotSpec::KnotSpec(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < 1) throw std::runtime_error("knot: p and q must be positive");
    if (std::gcd(p, q) != 1) throw std::runtime_error("knot: p and q must be coprime");
}

SampledSet knot_samples(const KnotSpec& spec, int N) {
    if (N < 16) throw std::runtime_error("knot_samples: need at least 16 samples");
    SampledSet K;
    K.dimension = 2;
    K.points2.reserve(N);
    for (int k = 0; k < N; ++k) {
        const double t = 2.0 * pi * k / N;
        K.points2.emplace_back(cplx(std::cos(spec.p * t), std::sin(spec.p * t)),
                               cplx(std::cos(spec.q * t), -std::sin(spec.q * t)));
    }
    std::ostringstream name;
    name << "torus-knot(" << spec.p << ",-" << spec.q << ")";
    K.generator = name.str();
    K.density_hint = N;
    K.densify = [spec, N](int factor) { return knot_samples(spec, N * factor); };
    return K;
}

MinimaxSolution knot_degree_experiment(const KnotSpec& spec, int degree, int N,
                                       const MinimaxOptions& options) {
    if (degree < 1) throw std::runtime_error("knot_degree_experiment: degree must be positive");
    const SampledSet K = knot_samples(spec, N);
    return minimax(K, monomial_basis(2, degree),
                   MinimaxConstraint::at_point(cplx(0.0, 0.0), cplx(0.0, 0.0)), options);
}

namespace {

// Strict certificate test on a denser resample: |P(point)| must exceed the
// sup norm over the samples by a relative margin.
bool verified_separator(const Poly2& P, std::pair<cplx, cplx> point, const SampledSet& K) {
    const SampledSet dense = K.densify ? K.densify(10) : K;
    const double s = sup_norm(P, dense);
    const double pv = std::abs(eval2(P, point.first, point.second));
    return s < pv * (1.0 - 1e-9);
}

}  // namespace

Poly2 totally_real_separator(std::pair<cplx, cplx> point, const SampledSet& K) {
    K.validate();
    if (K.dimension != 2)
        throw std::runtime_error("totally_real_separator: need a C^2 sample set");
    for (const auto& [z, w] : K.points2) {
        if (std::abs(w - std::conj(z)) > 1e-12)
            throw std::runtime_error("totally_real_separator: samples leave the plane w = conj z");
        if (z == point.first && w == point.second)
            throw std::runtime_error("totally_real_separator: point lies on the sampled set");
    }
    const cplx z0 = point.first, w0 = point.second;

    if (std::abs(w0 - std::conj(z0)) <= 1e-12) {
        // Point on the totally real plane: on K the product (z-z0)(w-w0) is
        // |zeta - z0|^2 >= 0, so subtracting half its normalized value
        // separates strictly.
        double M = 0.0;
        for (const auto& [z, w] : K.points2)
            M = std::max(M, std::abs((z - z0) * (w - w0)));
        if (M > 0.0) {
            Poly2 P(2);
            // 1 - (zw - z w0 - w z0 + z0 w0) / (2M)
            P.at(0, 0) = 1.0 - z0 * w0 / (2.0 * M);
            P.at(1, 1) = -1.0 / (2.0 * M);
            P.at(1, 0) = w0 / (2.0 * M);
            P.at(0, 1) = z0 / (2.0 * M);
            if (verified_separator(P, point, K)) return P;
        }
    } else {
        const double a = (z0 * w0).real();
        const double b = (z0 * w0).imag();
        if (std::abs(b) > 1e-12) {
            // On K the product zw is real, so a purely imaginary shift of
            // z0 w0 tilts moduli below 1 once m is large enough.
            double Mq = 0.0;
            for (const auto& [z, w] : K.points2) {
                const double x = (z * w).real();
                Mq = std::max(Mq, (x - a) * (x - a));
            }
            const double m = -(b > 0 ? 1.0 : -1.0) * (Mq + b * b + 1.0) / (2.0 * std::abs(b));
            Poly2 P(2);
            P.at(0, 0) = 1.0 + cplx(0.0, 1.0) / m * (-z0 * w0);
            P.at(1, 1) = cplx(0.0, 1.0) / m;
            if (verified_separator(P, point, K)) return P;
        }
    }

    // Fallback: LP separation over the full degree-2 basis, certificate
    // re-verified inside membership_numeric.
    MembershipOptions opts;
    const MembershipVerdict v = membership_numeric(K, z0, 2, opts, w0);
    if (v.status == Status::non_member && v.certificate2 &&
        verified_separator(*v.certificate2, point, K))
        return *v.certificate2;

    std::ostringstream msg;
    msg << "totally_real_separator: no verified degree-2 separator at (" << z0.real()
        << (z0.imag() < 0 ? "" : "+") << z0.imag() << "i, " << w0.real()
        << (w0.imag() < 0 ? "" : "+") << w0.imag() << "i); minimax value " << v.value
        << ", status " << to_string(v.status);
    throw std::runtime_error(msg.str());
}

SurfaceFamily example_family(int p) {
    SurfaceFamily fam;
    fam.base_point = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    fam.F = Poly2(2);
    switch (p) {
        case 2:  // zw - z - w
            fam.F.at(1, 1) = 1.0;
            fam.F.at(1, 0) = -1.0;
            fam.F.at(0, 1) = -1.0;
            break;
        case 3:  // -2zw + z - 2w
            fam.F.at(1, 1) = -2.0;
            fam.F.at(1, 0) = 1.0;
            fam.F.at(0, 1) = -2.0;
            break;
        case 4:  // 3zw - 3z - 5w
            fam.F.at(1, 1) = 3.0;
            fam.F.at(1, 0) = -3.0;
            fam.F.at(0, 1) = -5.0;
            break;
        default:
            throw std::runtime_error("example_family: catalogued families are p = 2, 3, 4");
    }
    return fam;
}

double geometric_hull_witness(const SurfaceFamily& family, const SampledSet& K) {
    K.validate();
    if (K.dimension != 2)
        throw std::runtime_error("geometric_hull_witness: need a C^2 sample set");
    double clearance = std::numeric_limits<double>::infinity();
    for (const auto& [z, w] : K.points2) {
        const cplx u = eval2(family.F, z, w);
        const double d = u.real() < 0.0 ? std::abs(u) : std::abs(u.imag());
        clearance = std::min(clearance, d);
    }
    return clearance;
}

}  // namespace hullbound
