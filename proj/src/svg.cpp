#include "hullbound/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hullbound/experiments.h"

namespace hullbound {

namespace {

constexpr double kSize = 640.0;

struct Frame {
    double cx, cy, scale;

    double x(double wx) const { return kSize / 2 + (wx - cx) * scale; }
    double y(double wy) const { return kSize / 2 - (wy - cy) * scale; }
};

Frame fit(double xmin, double xmax, double ymin, double ymax) {
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    return {(xmin + xmax) / 2, (ymin + ymax) / 2, kSize * 0.9 / span};
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string header() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) +
           "\" height=\"" + num(kSize) + "\" viewBox=\"0 0 " + num(kSize) + " " +
           num(kSize) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void circle_tag(std::string& out, const Frame& f, cplx c, double r,
                const std::string& stroke, const std::string& fill, double width) {
    out += "<circle cx=\"" + num(f.x(c.real())) + "\" cy=\"" + num(f.y(c.imag())) +
           "\" r=\"" + num(r * f.scale) + "\" stroke=\"" + stroke + "\" fill=\"" + fill +
           "\" stroke-width=\"" + num(width) + "\"/>\n";
}

void dot(std::string& out, const Frame& f, cplx p, const std::string& fill) {
    out += "<circle cx=\"" + num(f.x(p.real())) + "\" cy=\"" + num(f.y(p.imag())) +
           "\" r=\"4\" fill=\"" + fill + "\"/>\n";
}

}  // namespace

std::string svg_scene(const std::vector<cplx>& points, const std::vector<cplx>& marked,
                      const std::vector<CircleSpec>& circles, bool unit_circle) {
    double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
    for (const cplx& p : points) {
        xmin = std::min(xmin, p.real() - 0.2);
        xmax = std::max(xmax, p.real() + 0.2);
        ymin = std::min(ymin, p.imag() - 0.2);
        ymax = std::max(ymax, p.imag() + 0.2);
    }
    const Frame f = fit(xmin, xmax, ymin, ymax);
    std::string out = header();
    if (unit_circle) circle_tag(out, f, cplx(0, 0), 1.0, "#999", "none", 1.0);
    for (const CircleSpec& c : circles)
        circle_tag(out, f, c.center, c.radius, "#4477cc", "none", 1.0);
    for (const cplx& p : points) dot(out, f, p, "black");
    for (const cplx& p : marked) dot(out, f, p, "#cc3322");
    out += "</svg>\n";
    return out;
}

std::string svg_grid(const HullGrid& grid, const std::vector<cplx>& samples) {
    const Frame f =
        fit(grid.bbox.xmin, grid.bbox.xmax, grid.bbox.ymin, grid.bbox.ymax);
    std::string out = header();
    const double cw = (grid.bbox.xmax - grid.bbox.xmin) / (grid.nx - 1) * f.scale;
    const double ch = (grid.bbox.ymax - grid.bbox.ymin) / (grid.ny - 1) * f.scale;
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const Status s = grid.statuses[grid.index(ix, iy)];
            if (s == Status::non_member) continue;
            const double x =
                grid.bbox.xmin + ix * (grid.bbox.xmax - grid.bbox.xmin) / (grid.nx - 1);
            const double y =
                grid.bbox.ymin + iy * (grid.bbox.ymax - grid.bbox.ymin) / (grid.ny - 1);
            out += "<rect x=\"" + num(f.x(x) - cw / 2) + "\" y=\"" + num(f.y(y) - ch / 2) +
                   "\" width=\"" + num(cw) + "\" height=\"" + num(ch) + "\" fill=\"" +
                   (s == Status::member ? "#2a7f2a" : "#d9a520") + "\"/>\n";
        }
    }
    for (const cplx& p : samples) dot(out, f, p, "black");
    out += "</svg>\n";
    return out;
}

std::string svg_rings(int n_max) {
    const Frame f = fit(-0.1, 1.6, -0.85, 0.85);
    std::string out = header();
    for (int n = 1; n <= n_max; ++n) {
        const cplx c(PathologicalCurveSpec::ring_center(n), 0.0);
        circle_tag(out, f, c, PathologicalCurveSpec::ring_radius(n), "#333", "none", 1.0);
        for (const cplx& p : PathologicalCurveSpec::ring_spread_points(n))
            dot(out, f, p, "#cc3322");
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hullbound
