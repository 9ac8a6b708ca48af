#include "hullbound/json_out.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hullbound {

namespace {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void escape_into(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

Json Json::null() { return Json(); }

Json Json::boolean(bool b) {
    Json j;
    j.type_ = Type::boolean;
    j.bool_ = b;
    return j;
}

Json Json::number(double v) {
    if (!std::isfinite(v)) throw std::runtime_error("Json: non-finite number");
    Json j;
    j.type_ = Type::number;
    j.num_ = v;
    return j;
}

Json Json::str(std::string s) {
    Json j;
    j.type_ = Type::string;
    j.str_ = std::move(s);
    return j;
}

Json Json::array() {
    Json j;
    j.type_ = Type::array;
    return j;
}

Json Json::object() {
    Json j;
    j.type_ = Type::object;
    return j;
}

Json& Json::push(Json v) {
    if (type_ != Type::array) throw std::runtime_error("Json: push on non-array");
    items_.push_back(std::move(v));
    return *this;
}

Json& Json::set(const std::string& key, Json v) {
    if (type_ != Type::object) throw std::runtime_error("Json: set on non-object");
    fields_.emplace_back(key, std::move(v));
    return *this;
}

void Json::write(std::string& out) const {
    switch (type_) {
        case Type::null: out += "null"; break;
        case Type::boolean: out += bool_ ? "true" : "false"; break;
        case Type::number: out += format_number(num_); break;
        case Type::string: escape_into(str_, out); break;
        case Type::array:
            out += '[';
            for (size_t i = 0; i < items_.size(); ++i) {
                if (i) out += ',';
                items_[i].write(out);
            }
            out += ']';
            break;
        case Type::object:
            out += '{';
            for (size_t i = 0; i < fields_.size(); ++i) {
                if (i) out += ',';
                escape_into(fields_[i].first, out);
                out += ':';
                fields_[i].second.write(out);
            }
            out += '}';
            break;
    }
}

std::string Json::dump() const {
    std::string out;
    write(out);
    return out;
}

Json json_complex(cplx z) {
    Json a = Json::array();
    a.push(Json::number(z.real()));
    a.push(Json::number(z.imag()));
    return a;
}

Json json_poly(const Poly1& p) {
    Json j = Json::object();
    j.set("dim", Json::number(1));
    const auto deg = p.degree();
    j.set("degree", deg ? Json::number(*deg) : Json::null());
    Json coeffs = Json::array();
    for (const cplx& c : p.coeffs) coeffs.push(json_complex(c));
    j.set("coeffs", std::move(coeffs));
    return j;
}

Json json_poly(const Poly2& p) {
    Json j = Json::object();
    j.set("dim", Json::number(2));
    j.set("degree", Json::number(p.max_degree));
    Json coeffs = Json::array();
    for (const cplx& c : p.coeffs) coeffs.push(json_complex(c));
    j.set("coeffs", std::move(coeffs));
    return j;
}

Json json_circle(const CircleSpec& c) {
    Json j = Json::object();
    j.set("center", json_complex(c.center));
    j.set("radius", Json::number(c.radius));
    return j;
}

Json json_verdict(const MembershipVerdict& v) {
    Json j = Json::object();
    j.set("status", Json::str(to_string(v.status)));
    if (std::isfinite(v.residual)) j.set("residual", Json::number(v.residual));
    if (std::isfinite(v.value)) j.set("value", Json::number(v.value));
    j.set("w", json_complex(v.w));
    if (v.dimension == 2) j.set("w2", json_complex(v.w2));
    j.set("degree_bound", Json::number(v.degree_bound));
    if (v.certificate1) j.set("certificate", json_poly(*v.certificate1));
    if (v.certificate2) j.set("certificate", json_poly(*v.certificate2));
    if (v.certificate_failed) j.set("certificate_failed", Json::boolean(true));
    return j;
}

Json json_minimax(const MinimaxSolution& s) {
    Json j = Json::object();
    j.set("value", Json::number(s.value));
    Json coeffs = Json::array();
    for (const cplx& c : s.coefficients) coeffs.push(json_complex(c));
    j.set("coefficients", std::move(coeffs));
    Json active = Json::array();
    for (int k : s.active_points) active.push(Json::number(k));
    j.set("active_points", std::move(active));
    j.set("directions", Json::number(s.directions_used));
    return j;
}

std::string grid_csv(const HullGrid& grid) {
    std::string out = "x,y,value,status\n";
    for (int iy = 0; iy < grid.ny; ++iy) {
        const double y =
            grid.bbox.ymin + iy * (grid.bbox.ymax - grid.bbox.ymin) / (grid.ny - 1);
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double x =
                grid.bbox.xmin + ix * (grid.bbox.xmax - grid.bbox.xmin) / (grid.nx - 1);
            const size_t idx = grid.index(ix, iy);
            out += format_number(x);
            out += ',';
            out += format_number(y);
            out += ',';
            out += format_number(grid.values[idx]);
            out += ',';
            out += to_string(grid.statuses[idx]);
            out += '\n';
        }
    }
    return out;
}

}  // namespace hullbound
