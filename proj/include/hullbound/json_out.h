// Deterministic JSON emission: insertion-ordered objects, all numbers
// printed with 17 significant digits, so identical inputs produce
// byte-identical reports.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hullbound/c2.h"
#include "hullbound/cheb.h"
#include "hullbound/geometry.h"
#include "hullbound/verdict.h"

namespace hullbound {

/// Minimal ordered JSON value for output (input parsing uses a full parser).
class Json {
  public:
    static Json null();
    static Json boolean(bool b);
    static Json number(double v);  // throws on non-finite values
    static Json str(std::string s);
    static Json array();
    static Json object();

    /// Appends to an array value.
    Json& push(Json v);
    /// Appends a key (insertion order preserved) to an object value.
    Json& set(const std::string& key, Json v);

    std::string dump() const;

  private:
    enum class Type { null, boolean, number, string, array, object };
    Type type_ = Type::null;
    bool bool_ = false;
    double num_ = 0.0;
    std::string str_;
    std::vector<Json> items_;
    std::vector<std::pair<std::string, Json>> fields_;

    void write(std::string& out) const;
};

Json json_complex(cplx z);
Json json_poly(const Poly1& p);
Json json_poly(const Poly2& p);
Json json_circle(const CircleSpec& c);
Json json_verdict(const MembershipVerdict& v);
Json json_minimax(const MinimaxSolution& s);

/// CSV rendering of a hull grid with header "x,y,value,status", rows in
/// y-major node order, numbers at 17 significant digits.
std::string grid_csv(const HullGrid& grid);

}  // namespace hullbound
