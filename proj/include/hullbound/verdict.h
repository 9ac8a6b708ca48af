// The shared membership verdict: status, the deciding scalar (alignment
// residual for the exact oracle, minimax value for the numeric one), and an
// optional separating-polynomial certificate.
#pragma once

#include <limits>
#include <optional>

#include "hullbound/poly.h"

namespace hullbound {

enum class Status { member, non_member, borderline };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::member: return "member";
        case Status::non_member: return "non-member";
        case Status::borderline: return "borderline";
    }
    return "?";
}

struct MembershipVerdict {
    Status status = Status::borderline;
    // Relative alignment residual (exact oracle); NaN when not applicable.
    double residual = std::numeric_limits<double>::quiet_NaN();
    // Minimax optimum (numeric oracle); NaN when not applicable.
    double value = std::numeric_limits<double>::quiet_NaN();
    // Queried point (second component used only in dimension 2).
    cplx w{0.0, 0.0};
    cplx w2{0.0, 0.0};
    int dimension = 1;
    int degree_bound = 0;
    // Separating certificate, re-verified before being attached.
    std::optional<Poly1> certificate1;
    std::optional<Poly2> certificate2;
    // True only when certificate construction broke down structurally
    // (|P(w)| evaluated to zero despite the normalization); a candidate
    // whose dense re-verification merely lands back above the separation
    // threshold is reported as a plain borderline verdict instead.
    bool certificate_failed = false;
};

}  // namespace hullbound
