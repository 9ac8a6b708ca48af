#include "hullbound/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hullbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCostTol = 1e-9;    // reduced-cost optimality tolerance
constexpr double kPivotTol = 1e-11;  // smallest usable pivot element
constexpr double kStepTol = 1e-12;   // steps below this count as degenerate
constexpr int kRefactorEvery = 60;
constexpr int kBlandTrigger = 100;
constexpr int kMaxIterations = 50000;

enum class VarState { basic, at_lower, at_upper };

// Dense tableau-free simplex state over variables
//   [u_0..u_{p-1}, v_0..v_{p-1}, t, s_0..s_{N-1}]
// with y = u - v. All lower bounds are zero; uppers are ybound, ybound,
// tmax, +inf respectively.
struct Simplex {
    int rows, p, nvars;
    const std::vector<std::vector<double>>& G;
    const std::vector<double>& h;
    double ybound, tmax;

    std::vector<VarState> state;
    std::vector<int> basis;              // variable index occupying each row
    std::vector<double> binv;            // rows x rows, row-major
    std::vector<double> xb;              // values of basic variables
    std::vector<double> colbuf;

    Simplex(const std::vector<std::vector<double>>& G_, const std::vector<double>& h_,
            double yb, double tm)
        : rows(static_cast<int>(G_.size())),
          p(rows == 0 ? 0 : static_cast<int>(G_[0].size())),
          nvars(2 * p + 1 + rows),
          G(G_), h(h_), ybound(yb), tmax(tm) {}

    int t_index() const { return 2 * p; }

    double upper(int j) const {
        if (j < 2 * p) return ybound;
        if (j == 2 * p) return tmax;
        return kInf;
    }

    // Column j of the constraint matrix [G | -G | -1 | I].
    void column(int j, std::vector<double>& out) const {
        out.assign(rows, 0.0);
        if (j < p) {
            for (int i = 0; i < rows; ++i) out[i] = G[i][j];
        } else if (j < 2 * p) {
            for (int i = 0; i < rows; ++i) out[i] = -G[i][j - p];
        } else if (j == 2 * p) {
            for (int i = 0; i < rows; ++i) out[i] = -1.0;
        } else {
            out[j - 2 * p - 1] = 1.0;
        }
    }

    double nonbasic_value(int j) const {
        return state[j] == VarState::at_upper ? upper(j) : 0.0;
    }

    // Rebuilds binv by Gauss-Jordan elimination with partial pivoting and
    // recomputes the basic values from the nonbasic ones.
    void refactor() {
        std::vector<double> M(static_cast<size_t>(rows) * rows, 0.0);
        std::vector<double> col;
        for (int k = 0; k < rows; ++k) {
            column(basis[k], col);
            for (int i = 0; i < rows; ++i) M[static_cast<size_t>(i) * rows + k] = col[i];
        }
        binv.assign(static_cast<size_t>(rows) * rows, 0.0);
        for (int i = 0; i < rows; ++i) binv[static_cast<size_t>(i) * rows + i] = 1.0;
        for (int c = 0; c < rows; ++c) {
            int piv = c;
            for (int r = c + 1; r < rows; ++r)
                if (std::abs(M[static_cast<size_t>(r) * rows + c]) >
                    std::abs(M[static_cast<size_t>(piv) * rows + c]))
                    piv = r;
            const double pv = M[static_cast<size_t>(piv) * rows + c];
            if (std::abs(pv) < 1e-13) throw std::runtime_error("simplex: singular basis");
            if (piv != c) {
                for (int k = 0; k < rows; ++k) {
                    std::swap(M[static_cast<size_t>(piv) * rows + k],
                              M[static_cast<size_t>(c) * rows + k]);
                    std::swap(binv[static_cast<size_t>(piv) * rows + k],
                              binv[static_cast<size_t>(c) * rows + k]);
                }
            }
            const double inv = 1.0 / M[static_cast<size_t>(c) * rows + c];
            for (int k = 0; k < rows; ++k) {
                M[static_cast<size_t>(c) * rows + k] *= inv;
                binv[static_cast<size_t>(c) * rows + k] *= inv;
            }
            for (int r = 0; r < rows; ++r) {
                if (r == c) continue;
                const double f = M[static_cast<size_t>(r) * rows + c];
                if (f == 0.0) continue;
                for (int k = 0; k < rows; ++k) {
                    M[static_cast<size_t>(r) * rows + k] -=
                        f * M[static_cast<size_t>(c) * rows + k];
                    binv[static_cast<size_t>(r) * rows + k] -=
                        f * binv[static_cast<size_t>(c) * rows + k];
                }
            }
        }
        recompute_xb();
    }

    void recompute_xb() {
        // rhs = h - sum over nonbasic-at-upper columns
        std::vector<double> rhs = h;
        std::vector<double> col;
        for (int j = 0; j < nvars; ++j) {
            if (state[j] == VarState::basic) continue;
            const double val = nonbasic_value(j);
            if (val == 0.0) continue;
            column(j, col);
            for (int i = 0; i < rows; ++i) rhs[i] -= col[i] * val;
        }
        xb.assign(rows, 0.0);
        for (int i = 0; i < rows; ++i) {
            double s = 0.0;
            for (int k = 0; k < rows; ++k) s += binv[static_cast<size_t>(i) * rows + k] * rhs[k];
            xb[i] = s;
        }
    }

    // Reduced cost of nonbasic j for objective c = e_t. pi is the row of
    // binv owned by t when t is basic, otherwise the zero vector.
    double reduced_cost(int j, const double* pi) const {
        double d = j == t_index() ? 1.0 : 0.0;
        if (pi == nullptr) return d;
        if (j < p) {
            for (int i = 0; i < rows; ++i) d -= pi[i] * G[i][j];
        } else if (j < 2 * p) {
            for (int i = 0; i < rows; ++i) d += pi[i] * G[i][j - p];
        } else if (j == 2 * p) {
            for (int i = 0; i < rows; ++i) d += pi[i];
        } else {
            d -= pi[j - 2 * p - 1];
        }
        return d;
    }

    SimplexResult run(bool force_bland) {
        SimplexResult out;
        if (rows == 0) {
            out.y.assign(p, 0.0);
            out.t = 0.0;
            return out;
        }
        state.assign(nvars, VarState::at_lower);
        basis.resize(rows);
        for (int i = 0; i < rows; ++i) {
            basis[i] = 2 * p + 1 + i;
            state[basis[i]] = VarState::basic;
        }
        // Start feasible: if some h_i < 0, make t basic in the worst row.
        double t0 = 0.0;
        int worst = -1;
        for (int i = 0; i < rows; ++i)
            if (-h[i] > t0) { t0 = -h[i]; worst = i; }
        if (worst >= 0) {
            if (t0 > tmax) throw std::runtime_error("simplex: infeasible at t cap");
            state[basis[worst]] = VarState::at_lower;
            basis[worst] = t_index();
            state[t_index()] = VarState::basic;
        }
        refactor();

        int since_refactor = 0;
        int degenerate_run = 0;
        bool bland = force_bland;
        std::vector<double>& w = colbuf;

        for (int iter = 0;; ++iter) {
            if (iter >= kMaxIterations)
                throw std::runtime_error("simplex: iteration limit exceeded");
            // pricing
            int trow = -1;
            for (int i = 0; i < rows; ++i)
                if (basis[i] == t_index()) { trow = i; break; }
            const double* pi =
                trow >= 0 ? &binv[static_cast<size_t>(trow) * rows] : nullptr;

            int enter = -1;
            double best = 0.0;
            for (int j = 0; j < nvars; ++j) {
                if (state[j] == VarState::basic) continue;
                // Never admit u_j alongside v_j: their columns are exact
                // negatives, so such a basis is singular by construction.
                if (j < p && state[j + p] == VarState::basic) continue;
                if (j >= p && j < 2 * p && state[j - p] == VarState::basic) continue;
                const double d = reduced_cost(j, pi);
                const double viol = state[j] == VarState::at_lower ? -d : d;
                if (viol > kCostTol) {
                    if (bland) { enter = j; break; }
                    if (viol > best) { best = viol; enter = j; }
                }
            }
            if (enter < 0) break;  // optimal

            column(enter, w);
            // direction of basic change per unit increase of the entering
            // variable toward the interior
            std::vector<double> dir(rows, 0.0);
            for (int i = 0; i < rows; ++i) {
                double s = 0.0;
                for (int k = 0; k < rows; ++k)
                    s += binv[static_cast<size_t>(i) * rows + k] * w[k];
                dir[i] = s;
            }
            const double sigma = state[enter] == VarState::at_lower ? 1.0 : -1.0;

            double step = upper(enter);  // bound-to-bound flip distance
            int leave_row = -1;
            for (int i = 0; i < rows; ++i) {
                const double delta = sigma * dir[i];
                double limit = kInf;
                // Clamp drifted basic values into their bounds so the step
                // never goes negative, which would pivot on noise.
                if (delta > kPivotTol)
                    limit = std::max(xb[i], 0.0) / delta;  // drops to lower 0
                else if (delta < -kPivotTol && upper(basis[i]) < kInf)
                    limit = std::max(upper(basis[i]) - xb[i], 0.0) / (-delta);
                const double tie =
                    1e-9 * (1.0 + std::min(std::abs(step), 1e30)) + 1e-15;
                if (limit < step - tie ||
                    (leave_row >= 0 && limit < step + tie &&
                     (bland ? basis[i] < basis[leave_row]
                            : std::abs(dir[i]) > std::abs(dir[leave_row])))) {
                    step = limit;
                    leave_row = i;
                }
            }
            if (step == kInf) throw std::runtime_error("simplex: unbounded direction");
            if (step < kStepTol) {
                if (++degenerate_run >= kBlandTrigger) bland = true;
            } else {
                degenerate_run = 0;
                bland = force_bland;
            }

            if (leave_row < 0) {
                // bound flip, basis unchanged
                for (int i = 0; i < rows; ++i) xb[i] -= sigma * dir[i] * step;
                state[enter] = state[enter] == VarState::at_lower ? VarState::at_upper
                                                                  : VarState::at_lower;
                continue;
            }

            // pivot: entering becomes basic in leave_row
            const int leaving = basis[leave_row];
            const double delta_leave = sigma * dir[leave_row];
            state[leaving] =
                delta_leave > 0.0 ? VarState::at_lower : VarState::at_upper;
            for (int i = 0; i < rows; ++i) xb[i] -= sigma * dir[i] * step;
            xb[leave_row] = nonbasic_value(enter) + sigma * step;
            basis[leave_row] = enter;
            state[enter] = VarState::basic;

            // eta update of binv
            const double pv = dir[leave_row];
            if (std::abs(pv) < kPivotTol) throw std::runtime_error("simplex: zero pivot");
            double* prow = &binv[static_cast<size_t>(leave_row) * rows];
            for (int k = 0; k < rows; ++k) prow[k] /= pv;
            for (int i = 0; i < rows; ++i) {
                if (i == leave_row) continue;
                const double f = dir[i];
                if (f == 0.0) continue;
                double* irow = &binv[static_cast<size_t>(i) * rows];
                for (int k = 0; k < rows; ++k) irow[k] -= f * prow[k];
            }
            if (++since_refactor >= kRefactorEvery) {
                refactor();
                since_refactor = 0;
            }
        }

        refactor();  // final clean recomputation of basic values
        out.y.assign(p, 0.0);
        out.t = nonbasic_value(t_index());
        std::vector<double> full(nvars, 0.0);
        for (int j = 0; j < nvars; ++j)
            if (state[j] != VarState::basic) full[j] = nonbasic_value(j);
        for (int i = 0; i < rows; ++i) full[basis[i]] = xb[i];
        for (int j = 0; j < p; ++j) out.y[j] = full[j] - full[p + j];
        out.t = full[t_index()];
        return out;
    }
};

}  // namespace

SimplexResult solve_min_t(const std::vector<std::vector<double>>& G,
                          const std::vector<double>& h, double ybound, double tmax) {
    if (G.size() != h.size())
        throw std::runtime_error("solve_min_t: row count mismatch");
    for (const auto& row : G)
        if (!G.empty() && row.size() != G[0].size())
            throw std::runtime_error("solve_min_t: ragged matrix");
    if (!(ybound > 0.0) || !(tmax > 0.0))
        throw std::runtime_error("solve_min_t: bounds must be positive");
    try {
        Simplex s(G, h, ybound, tmax);
        return s.run(false);
    } catch (const std::runtime_error&) {
        // The Dantzig path occasionally wears the basis down on degenerate
        // instances; Bland's rule takes a different, provably terminating
        // pivot sequence, so retry once from scratch before giving up.
        Simplex s(G, h, ybound, tmax);
        return s.run(true);
    }
}

}  // namespace hullbound
