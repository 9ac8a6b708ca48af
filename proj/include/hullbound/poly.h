// Complex polynomial arithmetic in one and two variables, monomial bases,
// and the sampled-set container shared by every other module.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "hullbound/common.h"

namespace hullbound {

// Dense univariate polynomial; coeffs[k] multiplies z^k. The zero polynomial
// is canonically represented by an empty coefficient list and reports no
// degree. Trailing coefficients are trimmed only when they are exactly zero:
// the degree is semantically load-bearing and must never drift by epsilon.
struct Poly1 {
    std::vector<cplx> coeffs;

    Poly1() = default;
    explicit Poly1(std::vector<cplx> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == cplx(0.0, 0.0)) coeffs.pop_back();
    }
    // Highest index with a nonzero coefficient; nullopt for the zero polynomial.
    std::optional<int> degree() const {
        if (coeffs.empty()) return std::nullopt;
        return static_cast<int>(coeffs.size()) - 1;
    }
};

// Dense bivariate polynomial of bounded total degree; coefficient of
// z^i w^j is stored for every i + j <= max_degree in graded-lex order
// (total degree blocks; within block d: z^d, z^{d-1}w, ..., w^d).
struct Poly2 {
    int max_degree = 0;
    std::vector<cplx> coeffs;  // size (max_degree+1)(max_degree+2)/2

    Poly2() : coeffs(1, cplx(0.0, 0.0)) {}
    explicit Poly2(int deg)
        : max_degree(deg),
          coeffs(static_cast<size_t>((deg + 1) * (deg + 2) / 2), cplx(0.0, 0.0)) {
        if (deg < 0) throw std::runtime_error("Poly2: negative degree");
    }

    // Offset of the (i, j) coefficient within the graded-lex layout.
    static size_t index_of(int i, int j) {
        const int t = i + j;
        return static_cast<size_t>(t * (t + 1) / 2 + (t - i));
    }
    cplx& at(int i, int j) { return coeffs[index_of(i, j)]; }
    cplx at(int i, int j) const { return coeffs[index_of(i, j)]; }

    // Total degree as max(i + j) over nonzero entries; nullopt when zero.
    std::optional<int> degree() const;
};

// A finite sample of a compact set in C (dimension 1) or C^2 (dimension 2),
// together with a textual description of the generating set and an optional
// callback that re-samples the generator at a given density multiple (used
// for certificate re-verification).
struct SampledSet {
    int dimension = 1;
    std::vector<cplx> points1;
    std::vector<std::pair<cplx, cplx>> points2;
    std::string generator = "points";
    double density_hint = 0.0;
    std::function<SampledSet(int factor)> densify;  // may be empty

    size_t size() const {
        return dimension == 1 ? points1.size() : points2.size();
    }
    void validate() const;
};

// Exponent tuple of one monomial; j is 0 for univariate bases.
struct Monomial {
    int i = 0;
    int j = 0;
    int total() const { return i + j; }
};

// Horner evaluation of p at z.
cplx eval1(const Poly1& p, cplx z);

// Nested Horner evaluation (inner variable w, outer z) of p at (z, w).
cplx eval2(const Poly2& p, cplx z, cplx w);

// All exponents of total degree <= degree in graded-lex order.
// dimension 1: 1, z, z^2, ...; dimension 2: 1, z, w, z^2, zw, w^2, ...
std::vector<Monomial> monomial_basis(int dimension, int degree);

// max |p| over the samples of K (dimension must match).
double sup_norm(const Poly1& p, const SampledSet& K);
double sup_norm(const Poly2& p, const SampledSet& K);

// ---- sample-set constructors used across the modules and the CLI ----------

// Discrete point set (dimension 1); no generator beyond the points themselves.
SampledSet points_set(std::vector<cplx> pts);

// N uniformly spaced samples of the full unit circle.
SampledSet circle_samples(int N);

// N uniformly spaced samples (inclusive of endpoints) of the circular arc
// A_alpha = { e^{i t} : |t| <= alpha }.
SampledSet arc_samples(double alpha, int N);

// N uniformly spaced samples of the straight segment [a, b].
SampledSet segment_samples(cplx a, cplx b, int N);

}  // namespace hullbound
