// hullbound: command-line surface over the degree-bounded hull library.
// Subcommands cover the exact oracle, circle constructions, grid hulls, arc
// experiments, torus knots, totally-real separation, witness families, monic
// minimax, the shrinking-ring curve, and the Jacobian check. All reports are
// deterministic JSON/CSV; SVG rendering is presentation-only.
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hullbound/c2.h"
#include "hullbound/cheb.h"
#include "hullbound/exact_hull.h"
#include "hullbound/experiments.h"
#include "hullbound/geometry.h"
#include "hullbound/json_out.h"
#include "hullbound/svg.h"

namespace hb = hullbound;
using hb::json_complex;
using hb::svg_scene;

namespace {

// Input problems detected after flag parsing (malformed JSON, bad counts).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A certificate failed its independent re-verification.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

hb::cplx parse_complex(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw UsageError("expected a complex number as [re, im]");
    return hb::cplx(j[0].get<double>(), j[1].get<double>());
}

hb::cplx parse_complex(const std::string& text) {
    try {
        return parse_complex(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<hb::cplx> parse_points(const nlohmann::json& j) {
    if (!j.is_array()) throw UsageError("expected an array of [re, im] pairs");
    std::vector<hb::cplx> pts;
    pts.reserve(j.size());
    for (const auto& item : j) pts.push_back(parse_complex(item));
    return pts;
}

std::vector<hb::cplx> load_points(const std::string& inline_text, const std::string& path) {
    if (inline_text.empty() == path.empty())
        throw UsageError("provide exactly one of --points or --points-file");
    try {
        if (!inline_text.empty())
            return parse_points(nlohmann::json::parse(inline_text));
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        return parse_points(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit(const hb::Json& report, const std::string& json_path) {
    const std::string text = report.dump() + "\n";
    if (json_path.empty())
        std::cout << text;
    else
        write_file(json_path, text);
}

hb::Json json_bbox(const hb::BBox& b) {
    hb::Json a = hb::Json::array();
    a.push(hb::Json::number(b.xmin));
    a.push(hb::Json::number(b.xmax));
    a.push(hb::Json::number(b.ymin));
    a.push(hb::Json::number(b.ymax));
    return a;
}

// Samples of {(zeta, conj zeta) : |zeta| = 1}, the unit circle inside the
// totally real plane.
hb::SampledSet v_circle_samples(int N) {
    hb::SampledSet K;
    K.dimension = 2;
    K.points2.reserve(N);
    for (int k = 0; k < N; ++k) {
        const double t = 2.0 * hb::pi * k / N;
        const hb::cplx z(std::cos(t), std::sin(t));
        K.points2.emplace_back(z, std::conj(z));
    }
    K.generator = "v-circle";
    K.density_hint = N;
    K.densify = [N](int factor) { return v_circle_samples(N * factor); };
    return K;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hullbound: membership in degree-bounded polynomial hulls"};
    app.require_subcommand(1);

    std::string json_path, csv_path, svg_path;
    app.add_option("--json", json_path, "write the JSON report to this file (default: stdout)");
    app.add_option("--csv", csv_path, "write CSV output to this file (grid subcommand)");
    app.add_option("--svg", svg_path, "write an SVG rendering to this file");

    // ---- points ------------------------------------------------------------
    auto* cmd_points = app.add_subcommand("points", "exact membership / hull-point search");
    std::string pts_inline, pts_file, w_text;
    bool do_search = false;
    double tol = 1e-9;
    cmd_points->add_option("--points", pts_inline, "inline JSON [[re,im],...]");
    cmd_points->add_option("--points-file", pts_file, "JSON file with [[re,im],...]");
    cmd_points->add_option("--w", w_text, "query point [re,im]");
    cmd_points->add_flag("--search", do_search, "search for a hull point");
    cmd_points->add_option("--tol", tol, "alignment tolerance")->check(CLI::PositiveNumber);

    // ---- circle-points -----------------------------------------------------
    auto* cmd_circle = app.add_subcommand("circle-points", "unit-circle angle construction");
    std::string angles_text;
    cmd_circle->add_option("--angles", angles_text, "JSON array of angles in [0, 2*pi)")
        ->required();

    // ---- grid ----------------------------------------------------------------
    auto* cmd_grid = app.add_subcommand("grid", "grid approximation of a hull");
    std::string g_pts_inline, g_pts_file;
    int g_circle = 0, g_degree = 1, g_res = 101, g_directions = 128;
    std::vector<double> g_arc, g_bbox;
    double g_eps_member = 5e-3, g_eps_sep = 5e-2;
    bool g_force_lp = false;
    cmd_grid->add_option("--points", g_pts_inline, "inline JSON [[re,im],...]");
    cmd_grid->add_option("--points-file", g_pts_file, "JSON file with [[re,im],...]");
    cmd_grid->add_option("--circle", g_circle, "sample the unit circle with N points");
    cmd_grid->add_option("--arc", g_arc, "sample the arc: alpha N")->expected(2);
    cmd_grid->add_option("--degree", g_degree, "degree bound")->required()->check(CLI::PositiveNumber);
    cmd_grid->add_option("--bbox", g_bbox, "xmin xmax [ymin ymax]")->expected(2, 4);
    cmd_grid->add_option("--res", g_res, "nodes per axis")->check(CLI::Range(2, 100000));
    cmd_grid->add_option("--eps-member", g_eps_member, "member threshold")->check(CLI::PositiveNumber);
    cmd_grid->add_option("--eps-sep", g_eps_sep, "separation threshold")->check(CLI::PositiveNumber);
    cmd_grid->add_option("--directions", g_directions, "modulus polygon order");
    cmd_grid->add_flag("--force-lp", g_force_lp, "disable the exact interpolation shortcut");

    // ---- arc -----------------------------------------------------------------
    auto* cmd_arc = app.add_subcommand("arc", "arc non-convexity witness / quadratic separation");
    int a_n = 2;
    double a_alpha = 0.0, a_r = 0.5, a_phi = 0.0;
    int a_samples = 513;
    bool a_quad = false;
    cmd_arc->add_option("--n", a_n, "degree bound for the witness");
    cmd_arc->add_option("--alpha", a_alpha, "arc half-angle in radians")->required();
    cmd_arc->add_flag("--quad", a_quad, "quadratic separation mode");
    cmd_arc->add_option("--r", a_r, "query modulus (quad mode)");
    cmd_arc->add_option("--phi", a_phi, "query argument (quad mode)");
    cmd_arc->add_option("--samples", a_samples, "arc sample count (quad mode)");

    // ---- knot ----------------------------------------------------------------
    auto* cmd_knot = app.add_subcommand("knot", "torus-knot separation degree experiment");
    int k_p = 2, k_q = 1, k_degree = 1, k_samples = 2000, k_directions = 128;
    cmd_knot->add_option("--p", k_p, "knot parameter p")->required();
    cmd_knot->add_option("--q", k_q, "knot parameter q")->required();
    cmd_knot->add_option("--degree", k_degree, "degree bound")->required()->check(CLI::PositiveNumber);
    cmd_knot->add_option("--samples", k_samples, "parameter samples");
    cmd_knot->add_option("--directions", k_directions, "modulus polygon order");

    // ---- separate2 -----------------------------------------------------------
    auto* cmd_sep = app.add_subcommand("separate2", "degree-2 separation from the totally real plane");
    std::string s_z0, s_w0;
    int s_circle = 720;
    cmd_sep->add_option("--z0", s_z0, "first coordinate [re,im]")->required();
    cmd_sep->add_option("--w0", s_w0, "second coordinate [re,im] (default: conj z0)");
    cmd_sep->add_option("--circle", s_circle, "samples of the unit circle in the plane");

    // ---- family --------------------------------------------------------------
    auto* cmd_family = app.add_subcommand("family", "geometric hull witness families");
    int f_p = 2, f_samples = 2000;
    cmd_family->add_option("--p", f_p, "family index (2, 3, or 4)")->required();
    cmd_family->add_option("--samples", f_samples, "knot samples");

    // ---- cheb ----------------------------------------------------------------
    auto* cmd_cheb = app.add_subcommand("cheb", "monic minimax on symmetric circle subsets");
    int c_n = 2, c_samples = 267, c_directions = 128;
    double c_alpha = 0.0;
    cmd_cheb->add_option("--n", c_n, "monic degree")->required()->check(CLI::PositiveNumber);
    cmd_cheb->add_option("--alpha", c_alpha, "use arc samples of this half-angle");
    cmd_cheb->add_option("--samples", c_samples, "arc sample count");
    cmd_cheb->add_option("--directions", c_directions, "modulus polygon order");

    // ---- pathological ----------------------------------------------------------
    auto* cmd_path = app.add_subcommand("pathological", "shrinking-ring membership suite");
    int p_nmax = 6;
    cmd_path->add_option("--n-max", p_nmax, "largest ring index")->check(CLI::Range(2, 64));

    // ---- jacobian --------------------------------------------------------------
    auto* cmd_jac = app.add_subcommand("jacobian", "generic-configuration determinant check");
    std::string j_pts_inline, j_pts_file;
    cmd_jac->add_option("--points", j_pts_inline, "inline JSON [[re,im],...]");
    cmd_jac->add_option("--points-file", j_pts_file, "JSON file with [[re,im],...]");

    // Let the output flags (--json/--csv/--svg) appear after the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_points) {
            if (!do_search && w_text.empty())
                throw UsageError("points: need --w and/or --search");
            hb::PointConfiguration cfg(load_points(pts_inline, pts_file));
            hb::Json report = hb::Json::object();
            report.set("count", hb::Json::number(static_cast<double>(cfg.size())));
            report.set("degree_bound", hb::Json::number(cfg.n()));
            std::vector<hb::cplx> marked;
            if (!w_text.empty()) {
                const hb::cplx w = parse_complex(w_text);
                report.set("verdict", json_verdict(hb::membership_exact(cfg, w, tol)));
                marked.push_back(w);
            }
            if (do_search) {
                const hb::HullPointSearch search = hb::hull_point_search(cfg, tol);
                hb::Json js = hb::Json::object();
                js.set("found", hb::Json::boolean(search.w.has_value()));
                if (search.w) {
                    js.set("w", json_complex(*search.w));
                    js.set("residual", hb::Json::number(search.residual));
                    marked.push_back(*search.w);
                }
                js.set("min_residual", hb::Json::number(search.min_residual));
                js.set("method", hb::Json::str(search.method));
                hb::Json minima = hb::Json::array();
                for (const hb::cplx& m : search.minima) minima.push(json_complex(m));
                js.set("minima", std::move(minima));
                report.set("search", std::move(js));
            }
            if (!svg_path.empty())
                write_file(svg_path, svg_scene(cfg.points, marked, {}, false));
            emit(report, json_path);
            return 0;
        }

        if (*cmd_circle) {
            std::vector<double> angles;
            try {
                for (const auto& a : nlohmann::json::parse(angles_text)) {
                    if (!a.is_number()) throw UsageError("angles must be numbers");
                    angles.push_back(a.get<double>());
                }
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(std::string("malformed JSON: ") + e.what());
            }
            const std::optional<hb::cplx> w = hb::hull_point_unit_circle(angles);
            const int n = static_cast<int>(angles.size()) - 1;
            hb::Json report = hb::Json::object();
            hb::Json ja = hb::Json::array();
            for (double a : angles) ja.push(hb::Json::number(a));
            report.set("angles", std::move(ja));
            report.set("n", hb::Json::number(n));
            report.set("w", w ? json_complex(*w) : hb::Json::null());
            std::vector<hb::CircleSpec> circles;
            hb::Json jc = hb::Json::array();
            for (size_t k = 0; k + 1 < angles.size(); ++k) {
                try {
                    circles.push_back(hb::circle_for_gap(angles[k], angles[k + 1], n));
                    jc.push(json_circle(circles.back()));
                } catch (const std::runtime_error&) {
                    jc.push(hb::Json::null());
                }
            }
            report.set("circles", std::move(jc));
            std::vector<hb::cplx> pts, marked;
            for (double a : angles) pts.emplace_back(std::cos(a), std::sin(a));
            if (w) {
                marked.push_back(*w);
                const hb::MembershipVerdict verdict =
                    hb::membership_exact(hb::PointConfiguration(pts), *w, 1e-9);
                report.set("verdict", json_verdict(verdict));
            }
            if (!svg_path.empty())
                write_file(svg_path, svg_scene(pts, marked, circles, true));
            emit(report, json_path);
            return 0;
        }

        if (*cmd_grid) {
            hb::SampledSet K;
            if (g_circle > 0)
                K = hb::circle_samples(g_circle);
            else if (!g_arc.empty())
                K = hb::arc_samples(g_arc[0], static_cast<int>(g_arc[1]));
            else
                K = hb::points_set(load_points(g_pts_inline, g_pts_file));
            hb::BBox box;
            if (!g_bbox.empty()) {
                box.xmin = g_bbox[0];
                box.xmax = g_bbox[1];
                box.ymin = g_bbox.size() == 4 ? g_bbox[2] : g_bbox[0];
                box.ymax = g_bbox.size() == 4 ? g_bbox[3] : g_bbox[1];
            } else {
                double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
                for (const hb::cplx& z : K.points1) {
                    xmin = std::min(xmin, z.real());
                    xmax = std::max(xmax, z.real());
                    ymin = std::min(ymin, z.imag());
                    ymax = std::max(ymax, z.imag());
                }
                const double padx = 0.25 * std::max(xmax - xmin, 1e-6);
                const double pady = 0.25 * std::max(ymax - ymin, 1e-6);
                box = {xmin - padx, xmax + padx, ymin - pady, ymax + pady};
            }
            hb::MembershipOptions opts;
            opts.eps_member = g_eps_member;
            opts.eps_sep = g_eps_sep;
            opts.minimax.directions = g_directions;
            opts.minimax.force_lp = g_force_lp;
            const hb::HullGrid grid = hb::grid_hull(K, g_degree, box, g_res, g_res, opts);
            int members = 0, borderline = 0;
            for (const hb::Status s : grid.statuses) {
                members += s == hb::Status::member;
                borderline += s == hb::Status::borderline;
            }
            hb::Json report = hb::Json::object();
            report.set("degree", hb::Json::number(g_degree));
            report.set("nx", hb::Json::number(grid.nx));
            report.set("ny", hb::Json::number(grid.ny));
            report.set("bbox", json_bbox(box));
            report.set("samples", hb::Json::number(static_cast<double>(K.size())));
            report.set("members", hb::Json::number(members));
            report.set("borderline", hb::Json::number(borderline));
            report.set("non_members",
                       hb::Json::number(static_cast<double>(grid.statuses.size()) - members -
                                        borderline));
            if (!csv_path.empty()) write_file(csv_path, grid_csv(grid));
            if (!svg_path.empty()) write_file(svg_path, svg_grid(grid, K.points1));
            emit(report, json_path);
            return 0;
        }

        if (*cmd_arc) {
            hb::Json report = hb::Json::object();
            if (a_quad) {
                const hb::QuadraticSeparation sep =
                    hb::quadratic_arc_separation(a_alpha, a_r, a_phi, a_samples);
                report.set("alpha", hb::Json::number(a_alpha));
                report.set("r", hb::Json::number(a_r));
                report.set("phi", hb::Json::number(a_phi));
                report.set("a", hb::Json::number(sep.a));
                report.set("ratio", hb::Json::number(sep.ratio));
                report.set("margin", hb::Json::number(sep.margin));
                report.set("p", json_poly(sep.p));
                emit(report, json_path);
                return 0;
            }
            const std::optional<hb::ArcWitness> witness =
                hb::arc_nonconvexity_witness(a_n, a_alpha);
            report.set("n", hb::Json::number(a_n));
            report.set("alpha", hb::Json::number(a_alpha));
            report.set("found", hb::Json::boolean(witness.has_value()));
            if (witness) {
                report.set("w", json_complex(witness->w));
                report.set("residual", hb::Json::number(witness->residual));
                report.set("g0", hb::Json::number(witness->g0));
                hb::Json ja = hb::Json::array();
                for (double a : witness->angles) ja.push(hb::Json::number(a));
                report.set("angles", std::move(ja));
                hb::Json jp = hb::Json::array();
                for (const hb::cplx& z : witness->config.points) jp.push(json_complex(z));
                report.set("points", std::move(jp));
                if (!svg_path.empty())
                    write_file(svg_path,
                               svg_scene(witness->config.points, {witness->w}, {}, true));
            }
            emit(report, json_path);
            return 0;
        }

        if (*cmd_knot) {
            const hb::KnotSpec spec(k_p, k_q);
            hb::MinimaxOptions opts;
            opts.directions = k_directions;
            const hb::MinimaxSolution sol =
                hb::knot_degree_experiment(spec, k_degree, k_samples, opts);
            hb::Json report = hb::Json::object();
            report.set("p", hb::Json::number(k_p));
            report.set("q", hb::Json::number(k_q));
            report.set("degree", hb::Json::number(k_degree));
            report.set("samples", hb::Json::number(k_samples));
            report.set("minimax", json_minimax(sol));
            emit(report, json_path);
            return 0;
        }

        if (*cmd_sep) {
            const hb::cplx z0 = parse_complex(s_z0);
            const hb::cplx w0 = s_w0.empty() ? std::conj(z0) : parse_complex(s_w0);
            const hb::SampledSet K = v_circle_samples(s_circle);
            hb::Poly2 cert;
            try {
                cert = hb::totally_real_separator({z0, w0}, K);
            } catch (const std::runtime_error& e) {
                if (std::string(e.what()).find("no verified") != std::string::npos)
                    throw VerificationFailure(e.what());
                throw;
            }
            hb::Json report = hb::Json::object();
            hb::Json point = hb::Json::array();
            point.push(json_complex(z0));
            point.push(json_complex(w0));
            report.set("point", std::move(point));
            report.set("certificate", json_poly(cert));
            report.set("sup", hb::Json::number(sup_norm(cert, K)));
            report.set("at_point", hb::Json::number(std::abs(eval2(cert, z0, w0))));
            emit(report, json_path);
            return 0;
        }

        if (*cmd_family) {
            const hb::SurfaceFamily fam = hb::example_family(f_p);
            const hb::SampledSet K = hb::knot_samples(hb::KnotSpec(f_p, 1), f_samples);
            const double clearance = hb::geometric_hull_witness(fam, K);
            const hb::cplx at_base =
                eval2(fam.F, fam.base_point.first, fam.base_point.second);
            hb::Json report = hb::Json::object();
            report.set("p", hb::Json::number(f_p));
            report.set("samples", hb::Json::number(f_samples));
            report.set("clearance", hb::Json::number(clearance));
            report.set("F", json_poly(fam.F));
            hb::Json base = hb::Json::array();
            base.push(json_complex(fam.base_point.first));
            base.push(json_complex(fam.base_point.second));
            report.set("base", std::move(base));
            report.set("F_at_base", json_complex(at_base));
            emit(report, json_path);
            return 0;
        }

        if (*cmd_cheb) {
            hb::SampledSet A;
            if (c_alpha > 0.0) {
                A = hb::arc_samples(c_alpha, c_samples);
                for (int k = 0; k <= c_n; ++k) {
                    const double t = 2.0 * hb::pi * k / (c_n + 1);
                    const hb::cplx root(std::cos(t), std::sin(t));
                    bool present = false;
                    for (const hb::cplx& z : A.points1)
                        if (std::abs(z - root) <= 1e-12) {
                            present = true;
                            break;
                        }
                    if (!present) A.points1.push_back(root);
                }
                A.densify = nullptr;
                A.generator = "arc-with-spread-points";
            } else {
                A = hb::circle_samples(c_n + 1);
            }
            hb::MinimaxOptions opts;
            opts.directions = c_directions;
            const hb::ChebyshevReport rep = hb::chebyshev_symmetry_check(A, c_n, opts);
            hb::Json report = hb::Json::object();
            report.set("n", hb::Json::number(c_n));
            report.set("value", hb::Json::number(rep.solution.value));
            report.set("coeff_distance", hb::Json::number(rep.coeff_distance));
            report.set("minimax", json_minimax(rep.solution));
            emit(report, json_path);
            return 0;
        }

        if (*cmd_path) {
            const hb::PathologicalCurveSpec spec(p_nmax);
            hb::Json rings = hb::Json::array();
            for (int n = 1; n <= p_nmax; ++n) {
                hb::Json ring = hb::Json::object();
                ring.set("n", hb::Json::number(n));
                ring.set("center", hb::Json::number(hb::PathologicalCurveSpec::ring_center(n)));
                ring.set("radius", hb::Json::number(hb::PathologicalCurveSpec::ring_radius(n)));
                ring.set("verdict", json_verdict(hb::pathological_membership(spec, n)));
                rings.push(std::move(ring));
            }
            hb::Json report = hb::Json::object();
            report.set("n_max", hb::Json::number(p_nmax));
            report.set("rings", std::move(rings));
            if (!svg_path.empty()) write_file(svg_path, hb::svg_rings(p_nmax));
            emit(report, json_path);
            return 0;
        }

        if (*cmd_jac) {
            const std::vector<hb::cplx> pts = load_points(j_pts_inline, j_pts_file);
            const double det = hb::jacobian_constant_check(pts);
            double expected = 1.0;
            for (size_t k = 2; k <= pts.size(); ++k) expected *= static_cast<double>(k);
            hb::Json report = hb::Json::object();
            report.set("n", hb::Json::number(static_cast<double>(pts.size())));
            report.set("determinant", hb::Json::number(det));
            report.set("expected", hb::Json::number(expected));
            report.set("rel_error", hb::Json::number(std::abs(det - expected) / expected));
            emit(report, json_path);
            return 0;
        }
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
