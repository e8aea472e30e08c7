#pragma once

#include <vector>

#include "hodge/boundary_curve.hpp"
#include "hodge/rational.hpp"

namespace hodge {

// Branch datum (d; m_1,...,m_n) for degree-d cyclic admissible covers of a
// rational curve with n branch points: each m_i lies in [0, d) and the sum of
// the m_i is divisible by d. The cover curve is connected exactly when
// gcd(m_1,...,m_n,d) = 1; connectedness is recorded as a predicate rather
// than enforced, because data induced on boundary curves may fail it and the
// degree formulas still evaluate there.
class MonodromyDatum {
public:
    MonodromyDatum(Integer d, std::vector<Integer> m);

    const Integer& d() const { return d_; }
    int n() const { return static_cast<int>(m_.size()); }
    const std::vector<Integer>& m() const { return m_; }
    const Integer& m(int i) const; // 1-based
    bool is_connected() const { return connected_; }

    bool operator==(const MonodromyDatum& other) const {
        return d_ == other.d_ && m_ == other.m_;
    }

private:
    Integer d_;
    std::vector<Integer> m_;
    bool connected_;
};

// "(d=5; m=1,4,2,3)", for error messages and reports
std::string describe(const MonodromyDatum& datum);

struct CoverInvariants {
    Integer genus;          // arithmetic genus of the cover curve
    std::vector<Integer> q; // q_i = gcd(m_i, d), the number of points over branch point i
    std::vector<Integer> r; // r_i = d / q_i, the local ramification order
};

// Age <e m_i / d> of the weight-e character at the i-th branch point.
// Requires 0 <= e < d and 1 <= i <= n.
Rational age(const MonodromyDatum& datum, const Integer& e, int i);

// Sum of all n ages. Integral for every valid datum because d divides
// e * sum(m_i); non-integrality aborts as an internal error.
Integer age_sum(const MonodromyDatum& datum, const Integer& e);

// rank E_e = -1 + sum of ages, except that the rank is 0 at e = 0 and
// whenever every age vanishes (the eigenbundle is trivial there). Always a
// nonnegative integer.
Integer rank_eigenbundle(const MonodromyDatum& datum, const Integer& e);

CoverInvariants cover_invariants(const MonodromyDatum& datum);

// The 4-pointed datum cut out by a boundary curve: the monodromy at each leg
// is the block sum reduced mod d. Always valid; may be disconnected even when
// the ambient datum is connected.
MonodromyDatum induced_datum(const MonodromyDatum& datum, const BoundaryCurve& curve);

struct EnumerationOptions {
    bool include_disconnected = false;
    bool allow_zeros = true;
    // default emits one nondecreasing representative per reordering orbit
    bool all_orderings = false;
};

// All valid n-pointed data of degree d under the given options, in a fixed
// lexicographic order.
std::vector<MonodromyDatum> enumerate_data(const Integer& d, int n = 4,
                                           const EnumerationOptions& options = {});

} // namespace hodge
