#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "hodge/boundary_curve.hpp"
#include "hodge/json_util.hpp"
#include "hodge/monodromy.hpp"
#include "hodge/rational.hpp"

namespace hodge {

// Formal generator of the divisor algebra on an n-pointed space:
//   Boundary(J)  boundary divisor splitting the points into J | J^c, with
//                2 <= |J| <= n-2; J and its complement name the same divisor
//   Psi(j)       cotangent line class at the j-th point
//   Kappa1       the kappa_1 class
// Symbols order by (kind, indices), boundary < psi < kappa1.
struct DivisorSymbol {
    enum class Kind { boundary, psi, kappa1 };

    Kind kind;
    std::vector<int> subset; // boundary only, sorted ascending, 1-based
    int point = 0;           // psi only, 1-based

    static DivisorSymbol boundary(std::vector<int> J);
    static DivisorSymbol psi(int j);
    static DivisorSymbol kappa1();

    auto operator<=>(const DivisorSymbol&) const = default;
};

// Finite formal sum of symbols with exact rational coefficients, attached to
// a fixed n and d. Zero coefficients are never stored.
class DivisorClass {
public:
    DivisorClass(int n, Integer d);

    int n() const { return n_; }
    const Integer& d() const { return d_; }
    const std::map<DivisorSymbol, Rational>& terms() const { return terms_; }

    // accumulates; validates the symbol against n; drops terms that cancel
    void add(const DivisorSymbol& symbol, const Rational& coefficient);

    // 0 when the symbol is absent
    Rational coefficient(const DivisorSymbol& symbol) const;

    bool operator==(const DivisorClass&) const = default;

private:
    int n_;
    Integer d_;
    std::map<DivisorSymbol, Rational> terms_;
};

// Assembles a divisor class from a coefficient rule c(J) on the full power
// set of {1,...,n}: subset J contributes c(J) on its divisor, where the
// divisor of the empty and full sets is kappa_1, the divisor of a singleton
// {j} or its complement is -psi_j, and every other J is Boundary(J). J and
// J^c are both enumerated; their contributions are kept on separate symbols
// (see canonicalize). This is also the extension hook for experimenting with
// candidate coefficient rules.
using DeltaCoefficientFn = std::function<Rational(const std::vector<int>& J)>;
DivisorClass build_divisor_class(const MonodromyDatum& datum,
                                 const DeltaCoefficientFn& delta_coefficient);

// Divisor expression of lambda_1 on an n-pointed space: subset J carries
// gcd^2(sum_J m_i, d) / (24 d).
DivisorClass graph_formula_lambda1(const MonodromyDatum& datum);

// Candidate divisor expression of lambda_1^e on a 4-pointed space: subset I
// carries (1/2) min{0, 1 - sum_{i in I} <e m_i / d>}.
DivisorClass graph_formula_lambda1e_question(const MonodromyDatum& datum, const Integer& e);

// Intersection number of a boundary curve with a divisor class:
//   curve . Boundary(J) = (-1)^{#blocks inside J} / d  if J is a union of blocks, else 0
//   curve . Psi(j)      = 1/d  if {j} is a block, else 0
//   curve . Kappa1      = 1/d
Rational pair(const BoundaryCurve& curve, const DivisorClass& cls);

// Merges Boundary(J) and Boundary(J^c) onto the representative containing
// point 1. Pairings and degrees are unchanged.
DivisorClass canonicalize(const DivisorClass& cls);

// Degree of a divisor class on a 4-pointed space, where every symbol has
// degree 1/d (the space is its own unique boundary curve).
Rational evaluate_degree_4pt(const DivisorClass& cls);

// Stable shape:
//   {"n":5,"d":3,"terms":[{"sym":"B","J":[1,2],"c":"1/36"},
//                         {"sym":"P","j":3,"c":"-1/36"},
//                         {"sym":"K","c":"1/12"}]}
// Terms are sorted by (kind, indices); coefficients are exact fractions.
Json to_json(const DivisorClass& cls);
DivisorClass divisor_class_from_json(const Json& j);

std::string format_divisor_class(const DivisorClass& cls);

} // namespace hodge
