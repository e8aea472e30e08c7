#include "hodge/monodromy.hpp"

#include <string>

namespace hodge {

std::string describe(const MonodromyDatum& datum) {
    std::string s = "(d=" + datum.d().str() + "; m=";
    for (int i = 1; i <= datum.n(); ++i) {
        if (i > 1) {
            s += ",";
        }
        s += datum.m(i).str();
    }
    return s + ")";
}

MonodromyDatum::MonodromyDatum(Integer d, std::vector<Integer> m)
    : d_(std::move(d)), m_(std::move(m)) {
    if (d_ < 1) {
        throw ValidationError("monodromy datum: degree must be positive, got " + d_.str());
    }
    if (m_.size() < 3) {
        throw ValidationError("monodromy datum: need at least 3 branch points, got " +
                              std::to_string(m_.size()));
    }
    Integer sum = 0;
    for (const Integer& mi : m_) {
        if (mi < 0 || mi >= d_) {
            throw ValidationError("monodromy datum: m_i must lie in [0, d), got " + mi.str() +
                                  " with d = " + d_.str());
        }
        sum += mi;
    }
    const Integer residue = sum % d_;
    if (residue != 0) {
        throw ValidationError("monodromy datum: monodromies must sum to 0 mod d, residue " +
                              residue.str());
    }
    Integer g = d_;
    for (const Integer& mi : m_) {
        g = gcd(g, mi);
    }
    connected_ = (g == 1);
}

const Integer& MonodromyDatum::m(int i) const {
    if (i < 1 || i > n()) {
        throw ValidationError("monodromy datum: point index " + std::to_string(i) +
                              " out of range [1," + std::to_string(n()) + "]");
    }
    return m_[static_cast<std::size_t>(i - 1)];
}

Rational age(const MonodromyDatum& datum, const Integer& e, int i) {
    if (e < 0 || e >= datum.d()) {
        throw ValidationError("age: character must lie in [0, d), got " + e.str());
    }
    return frac_part(e * datum.m(i), datum.d());
}

Integer age_sum(const MonodromyDatum& datum, const Integer& e) {
    Rational s = 0;
    for (int i = 1; i <= datum.n(); ++i) {
        s += age(datum, e, i);
    }
    if (denominator(s) != 1) {
        throw CrossCheckError("age sum " + to_fraction_string(s) + " is not an integer for " +
                              describe(datum) + ", e = " + e.str());
    }
    return numerator(s);
}

Integer rank_eigenbundle(const MonodromyDatum& datum, const Integer& e) {
    if (e < 0 || e >= datum.d()) {
        throw ValidationError("rank_eigenbundle: character must lie in [0, d), got " + e.str());
    }
    if (e == 0) {
        return 0;
    }
    const Integer s = age_sum(datum, e);
    if (s == 0) {
        return 0; // every age vanishes, trivial eigenbundle
    }
    return s - 1;
}

CoverInvariants cover_invariants(const MonodromyDatum& datum) {
    CoverInvariants inv;
    Integer qsum = 0;
    for (int i = 1; i <= datum.n(); ++i) {
        Integer qi = gcd_with(datum.m(i), datum.d());
        inv.r.push_back(datum.d() / qi);
        qsum += qi;
        inv.q.push_back(std::move(qi));
    }
    const Integer twice = Integer(datum.n() - 2) * datum.d() - qsum;
    if (twice % 2 != 0) {
        throw CrossCheckError("genus expression is not integral for " + describe(datum));
    }
    inv.genus = 1 + twice / 2;
    if (datum.is_connected() && inv.genus < 0) {
        throw CrossCheckError("negative genus " + inv.genus.str() + " for connected datum " +
                              describe(datum));
    }
    return inv;
}

MonodromyDatum induced_datum(const MonodromyDatum& datum, const BoundaryCurve& curve) {
    if (curve.n() != datum.n()) {
        throw DimensionError("induced_datum: curve on " + std::to_string(curve.n()) +
                             " points paired with datum on " + std::to_string(datum.n()));
    }
    std::vector<Integer> legs;
    legs.reserve(4);
    for (const auto& block : curve.blocks()) {
        Integer s = 0;
        for (int idx : block) {
            s += datum.m(idx);
        }
        legs.push_back(s % datum.d());
    }
    return MonodromyDatum(datum.d(), std::move(legs));
}

namespace {

void extend_datum(const Integer& d, int n, const EnumerationOptions& opt, int pos,
                  std::vector<Integer>& m, Integer& sum,
                  std::vector<MonodromyDatum>& out) {
    if (pos == n) {
        if (sum % d != 0) {
            return;
        }
        MonodromyDatum datum(d, m);
        if (!opt.include_disconnected && !datum.is_connected()) {
            return;
        }
        out.push_back(std::move(datum));
        return;
    }
    Integer start = opt.allow_zeros ? 0 : 1;
    if (!opt.all_orderings && pos > 0 && m[static_cast<std::size_t>(pos - 1)] > start) {
        start = m[static_cast<std::size_t>(pos - 1)];
    }
    for (Integer v = start; v < d; ++v) {
        m[static_cast<std::size_t>(pos)] = v;
        sum += v;
        extend_datum(d, n, opt, pos + 1, m, sum, out);
        sum -= v;
    }
}

} // namespace

std::vector<MonodromyDatum> enumerate_data(const Integer& d, int n,
                                           const EnumerationOptions& options) {
    if (d < 1) {
        throw ValidationError("enumerate_data: degree must be positive, got " + d.str());
    }
    if (n < 3) {
        throw ValidationError("enumerate_data: need at least 3 branch points, got " +
                              std::to_string(n));
    }
    if (!options.allow_zeros && d == 1) {
        return {}; // no m in [1, 1)
    }
    std::vector<MonodromyDatum> out;
    std::vector<Integer> m(static_cast<std::size_t>(n));
    Integer sum = 0;
    extend_datum(d, n, options, 0, m, sum, out);
    return out;
}

} // namespace hodge
