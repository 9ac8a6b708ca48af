// Experiments in C^2: torus-knot minimal separation degree, totally-real
// degree-2 separation, and geometric hull witness families.
#pragma once

#include <utility>

#include "hullbound/cheb.h"
#include "hullbound/poly.h"

namespace hullbound {

/// Parameters of the (p,-q) torus knot {(e^{ip t}, e^{-iq t})}.
struct KnotSpec {
    int p = 2;
    int q = 1;

    KnotSpec(int p_, int q_);
};

/// N uniform parameter samples of the knot; every sample satisfies
/// |z| = |w| = 1 and z^q w^p = 1 exactly up to rounding. Requires N >= 16.
/// The set carries a generator for density re-sampling.
SampledSet knot_samples(const KnotSpec& spec, int N);

/// Minimax separation of (0,0) from the sampled knot over the bivariate
/// monomials of total degree <= degree. The value stays near 1 below degree
/// p+q and collapses toward 0 from p+q on.
MinimaxSolution knot_degree_experiment(const KnotSpec& spec, int degree, int N,
                                       const MinimaxOptions& options = {});

/// Degree-<=2 polynomial separating a point of C^2 from a sampled subset of
/// the totally real plane V = {(z, conj z)}: |P(point)| >= 1 and
/// sup_norm(P, K) < 1, verified on a 10x denser resample when K carries a
/// generator. Closed forms are used when the point lies on V or when
/// Im(z0 w0) is nonzero; otherwise (and on any verification failure) an LP
/// fallback over the full degree-2 basis is tried. Throws std::runtime_error
/// with diagnostics when no verified separator is found.
Poly2 totally_real_separator(std::pair<cplx, cplx> point, const SampledSet& K);

/// An algebraic surface family {F = lambda}, lambda in [0, infinity), with a
/// marked base point on the lambda = 0 member.
struct SurfaceFamily {
    Poly2 F;
    std::pair<cplx, cplx> base_point;
};

/// The three catalogued witness families for the knots K_p = (e^{ipt}, e^{-it}),
/// p in {2, 3, 4}: zw - z - w, -2zw + z - 2w, 3zw - 3z - 5w, all with base
/// point (0,0).
SurfaceFamily example_family(int p);

/// Smallest distance from F(sample) to the ray [0, infinity) over the sample
/// set: dist(u) = |u| when Re u < 0, |Im u| otherwise. A strictly positive
/// clearance certifies (up to sampling) that no member of the family meets
/// the set, excluding the base point from the geometric hull.
double geometric_hull_witness(const SurfaceFamily& family, const SampledSet& K);

}  // namespace hullbound
