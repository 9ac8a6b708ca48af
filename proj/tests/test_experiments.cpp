// Unit tests for arc witnesses, quadratic separation, the shrinking-ring
// curve, the monic Chebyshev report, and the Jacobian determinant check.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hullbound/experiments.h"
#include "hullbound/geometry.h"

using namespace hullbound;

TEST_CASE("arc witnesses match frozen constructions") {
    struct Expect {
        int n;
        double alpha;
        cplx w;
    };
    const Expect table[] = {
        {2, 0.90 * pi, cplx(0.069217788, -0.977599938)},
        {3, 0.85 * pi, cplx(0.988107461, 0.0)},
        {4, 0.80 * pi, cplx(0.702209007, -0.700819243)},
        {5, 0.82 * pi, cplx(0.993347458, 0.0)},
        {6, 0.87 * pi, cplx(0.860766006, -0.496617823)},
        {7, 0.87 * pi, cplx(0.994644299, 0.0)},
        {2, 0.55 * pi, cplx(0.042861350, -0.991614870)},
    };
    for (const Expect& e : table) {
        CAPTURE(e.n);
        const auto witness = arc_nonconvexity_witness(e.n, e.alpha);
        REQUIRE(witness.has_value());
        CHECK(std::abs(witness->w - e.w) < 1e-6);
        CHECK(witness->residual < 1e-9);
        REQUIRE(witness->angles.size() == static_cast<size_t>(e.n) + 1);
        // All points stay inside the arc and on the unit circle.
        CHECK(witness->angles.front() >= -e.alpha - 1e-12);
        CHECK(witness->angles.back() <= e.alpha + 1e-12);
        for (const cplx& z : witness->config.points)
            CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
        // The exact oracle confirms membership independently.
        CHECK(membership_exact(witness->config, witness->w).status == Status::member);
    }
}

TEST_CASE("arcs below the threshold have no witness") {
    // A witness forces the closing gap under 2*pi/n, i.e. alpha > (n-1)pi/n.
    CHECK_FALSE(arc_nonconvexity_witness(2, 0.45 * pi).has_value());
    CHECK_FALSE(arc_nonconvexity_witness(4, 0.70 * pi).has_value());
    CHECK_FALSE(arc_nonconvexity_witness(3, 0.60 * pi).has_value());
}

TEST_CASE("arc witness validation") {
    CHECK_THROWS_AS(arc_nonconvexity_witness(1, 0.5 * pi), std::runtime_error);
    CHECK_THROWS_AS(arc_nonconvexity_witness(2, 0.0), std::runtime_error);
    CHECK_THROWS_AS(arc_nonconvexity_witness(2, pi), std::runtime_error);
}

TEST_CASE("witness gaps deviate from the spread width by at most g0/2") {
    // The schedule clusters one gap of width g0; the chained gaps then sit
    // below 2*pi/n by about g0/2, so they recover the even spread as the
    // small gap closes.
    for (int n = 2; n <= 6; ++n) {
        const double alpha = (n - 1) * pi / n + 2e-4;
        const auto witness = arc_nonconvexity_witness(n, alpha);
        REQUIRE(witness.has_value());
        CHECK(witness->g0 > 0.0);
        double smallest = std::numeric_limits<double>::infinity();
        std::vector<double> gaps;
        for (size_t k = 0; k + 1 < witness->angles.size(); ++k) {
            gaps.push_back(witness->angles[k + 1] - witness->angles[k]);
            smallest = std::min(smallest, gaps.back());
        }
        CHECK(smallest == doctest::Approx(witness->g0).epsilon(1e-9));
        for (double g : gaps)
            if (g != smallest)
                CHECK(std::abs(g - 2.0 * pi / n) <= 0.55 * witness->g0 + 1e-12);
    }
}

TEST_CASE("chained gaps approach the spread width as the small gap closes") {
    // With the small gap pinned at g0 = 1e-4 the chained gap width d solves
    //   angle_at(w0, e^{i g0/2}, e^{i (g0/2 + d)}) = pi - (n-1) d / 2,
    // where w0 is the real-axis point of the small gap's circle; the root
    // must land within 1e-3 of 2*pi/n.
    const double g0 = 1e-4;
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        const cplx w0(std::cos((n + 1) * g0 / 4.0) / std::cos((n - 1) * g0 / 4.0), 0.0);
        const CircleSpec small_gap = circle_for_gap(-g0 / 2.0, g0 / 2.0, n);
        CHECK(std::abs(w0 - small_gap.center) ==
              doctest::Approx(small_gap.radius).epsilon(1e-9));
        auto f = [&](double d) {
            const cplx a = std::polar(1.0, g0 / 2.0);
            const cplx b = std::polar(1.0, g0 / 2.0 + d);
            return angle_at(w0, a, b) - (pi - (n - 1) * d / 2.0);
        };
        double lo = 2.0 * pi / n - 5e-3, hi = 2.0 * pi / n * (1.0 - 1e-13);
        REQUIRE(f(lo) < 0.0);
        REQUIRE(f(hi) > 0.0);
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            (f(mid) < 0.0 ? lo : hi) = mid;
        }
        CHECK(std::abs(0.5 * (lo + hi) - 2.0 * pi / n) <= 1e-3);
    }
}

TEST_CASE("quadratic separation at the frozen combination") {
    const QuadraticSeparation sep = quadratic_arc_separation(pi / 6.0, 0.5, 0.0);
    CHECK(sep.a == 1.0);
    CHECK(sep.margin == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(sep.ratio == doctest::Approx(1.25).epsilon(1e-9));
    REQUIRE(sep.p.degree() == 2);
    // p = z^2 - 2 e^{i phi} z + e^{2 i phi}(a^2 + 1) with phi = 0.
    CHECK(std::abs(sep.p.coeffs[2] - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(sep.p.coeffs[1] - cplx(-2.0, 0.0)) < 1e-15);
    CHECK(std::abs(sep.p.coeffs[0] - cplx(2.0, 0.0)) < 1e-15);
}

TEST_CASE("quadratic separation margin is stable under the shift parameter") {
    // In exact arithmetic the absolute margin equals (1-r)^2 for every a
    // once the sup is attained at the query angle; in doubles the
    // cancellation noise stays below 1e-6 over the whole doubling range.
    const double alpha = pi / 5.0, r = 0.6, phi = alpha / 2.0;
    const SampledSet A = arc_samples(alpha, 513);
    double prev = -std::numeric_limits<double>::infinity();
    for (int e = 0; e <= 15; ++e) {
        const double a = static_cast<double>(1 << e);
        const Poly1 p({std::polar(1.0, 2.0 * phi) * (a * a + 1.0),
                       -2.0 * std::polar(1.0, phi), cplx(1.0, 0.0)});
        const double margin =
            std::abs(eval1(p, r * std::polar(1.0, phi))) - sup_norm(p, A);
        CHECK(margin >= prev - 1e-6);
        CHECK(margin == doctest::Approx((1.0 - r) * (1.0 - r)).epsilon(1e-5));
        prev = margin;
    }
}

TEST_CASE("quadratic separation validation") {
    CHECK_THROWS_AS(quadratic_arc_separation(pi / 4.0, 0.5, 0.0), std::runtime_error);
    CHECK_THROWS_AS(quadratic_arc_separation(pi / 6.0, 0.0, 0.0), std::runtime_error);
    CHECK_THROWS_AS(quadratic_arc_separation(pi / 6.0, 1.0, 0.0), std::runtime_error);
    CHECK_THROWS_AS(quadratic_arc_separation(pi / 6.0, 0.5, pi / 5.0), std::runtime_error);
}

TEST_CASE("shrinking rings: geometry of the marked points") {
    for (int n = 1; n <= 5; ++n) {
        const auto pts = PathologicalCurveSpec::ring_spread_points(n);
        REQUIRE(pts.size() == static_cast<size_t>(2 * n + 2));
        const double c = PathologicalCurveSpec::ring_center(n);
        const double r = PathologicalCurveSpec::ring_radius(n);
        for (size_t k = 0; k < pts.size(); ++k) {
            CHECK(std::abs(std::abs(pts[k] - c) - r) < 1e-15);
            const double expected = pi * (2.0 * k + 1.0) / (2.0 * (n + 1));
            CHECK(std::arg((pts[k] - c) / r) ==
                  doctest::Approx(std::remainder(expected, 2.0 * pi)).epsilon(1e-12));
        }
        // The spread points avoid the removed horizontal crossings by
        // half the angular spacing.
        CHECK(PathologicalCurveSpec::removed_half_angle(n) ==
              doctest::Approx(pi / (2.0 * (n + 1))).epsilon(1e-15));
    }
}

TEST_CASE("shrinking rings: centers are members at degree 2n+1") {
    const PathologicalCurveSpec spec(6);
    for (int n = 1; n <= 6; ++n) {
        const MembershipVerdict v = pathological_membership(spec, n);
        CHECK(v.status == Status::member);
        CHECK(v.residual < 1e-10);
        CHECK(v.degree_bound == 2 * n + 1);
        CHECK(std::abs(v.w - cplx(1.0 / n, 0.0)) < 1e-15);
    }
    CHECK_THROWS_AS(pathological_membership(spec, 0), std::runtime_error);
    CHECK_THROWS_AS(pathological_membership(spec, 7), std::runtime_error);
    CHECK_THROWS_AS(PathologicalCurveSpec(1), std::runtime_error);
}

TEST_CASE("monic optimum on spread points") {
    const SampledSet A = points_set([] {
        std::vector<cplx> pts;
        for (int k = 0; k < 9; ++k) pts.push_back(std::polar(1.0, 2.0 * pi * k / 9.0));
        return pts;
    }());
    const ChebyshevReport rep = chebyshev_symmetry_check(A, 8);
    CHECK(rep.solution.value == doctest::Approx(1.0).epsilon(5e-3));
    CHECK(rep.coeff_distance < 0.05);
    CHECK(rep.solution.coefficients.back() == cplx(1.0, 0.0));
}

TEST_CASE("monic optimum on a circle superset") {
    // 24 circle samples contain the 4th roots of unity.
    const ChebyshevReport rep = chebyshev_symmetry_check(circle_samples(24), 3);
    CHECK(rep.solution.value == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("symmetry check input validation") {
    // Not conjugation-symmetric.
    SampledSet bad = points_set([] {
        std::vector<cplx> pts;
        for (int k = 0; k < 4; ++k) pts.push_back(std::polar(1.0, 2.0 * pi * k / 4.0));
        pts.emplace_back(0.5, 0.3);
        return pts;
    }());
    CHECK_THROWS_AS(chebyshev_symmetry_check(bad, 3), std::runtime_error);
    // Missing the 4th roots of unity.
    CHECK_THROWS_AS(chebyshev_symmetry_check(circle_samples(5), 3), std::runtime_error);
}

TEST_CASE("jacobian determinant equals n factorial") {
    CHECK(jacobian_constant_check({cplx(0.0, 2.0), cplx(3.0, 0.0)}) ==
          doctest::Approx(2.0).epsilon(1e-12));
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int n = 2; n <= 6; ++n) {
        double factorial = 1.0;
        for (int k = 2; k <= n; ++k) factorial *= k;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<cplx> pts;
            while (static_cast<int>(pts.size()) < n) {
                const cplx z(U(rng), U(rng));
                if (std::abs(z) < 0.1 || std::abs(z - cplx(1.0, 0.0)) < 0.1) continue;
                bool clash = false;
                for (const cplx& q : pts) clash |= std::abs(q - z) < 0.1;
                if (!clash) pts.push_back(z);
            }
            CHECK(jacobian_constant_check(pts) ==
                  doctest::Approx(factorial).epsilon(1e-9));
        }
    }
}

TEST_CASE("jacobian validation") {
    CHECK_THROWS_AS(jacobian_constant_check({cplx(2.0, 0.0)}), std::runtime_error);
    CHECK_THROWS_AS(jacobian_constant_check({cplx(2.0, 0.0), cplx(2.0, 0.0)}),
                    std::runtime_error);
    CHECK_THROWS_AS(jacobian_constant_check({cplx(0.0, 0.0), cplx(2.0, 0.0)}),
                    std::runtime_error);
    CHECK_THROWS_AS(jacobian_constant_check({cplx(1.0, 0.0), cplx(2.0, 0.0)}),
                    std::runtime_error);
}
