#include "hodge/localization.hpp"

#include <algorithm>

#include "hodge/degrees.hpp"

namespace hodge {

namespace {

void require_connected_4pt(const MonodromyDatum& datum, const char* what) {
    if (datum.n() != 4) {
        throw DimensionError(std::string(what) + ": needs a 4-pointed space, got n = " +
                             std::to_string(datum.n()));
    }
    if (!datum.is_connected()) {
        throw ValidationError(std::string(what) + ": datum " + describe(datum) +
                              " is disconnected; the torus fixed loci assume a connected cover");
    }
}

std::string degenerate_message(const LocalizationRelation& rel) {
    std::string s = "degenerate relation: alpha = 0, beta = " + to_fraction_string(rel.beta) +
                    ", contributions:";
    for (const auto& c : rel.contributions) {
        s += " " + c.label + "=(" + to_fraction_string(c.alpha_part) + "," +
             to_fraction_string(c.beta_part) + ")";
    }
    return s;
}

// vertex constant of a fixed locus carrying a genus-g cover component with
// q-fold branching, before division by 24 d^2
Integer locus_constant(const Integer& d, const Integer& g, const Integer& q) {
    return 3 * d * d * d + 12 * g * d * d + 6 * d * d * q - 16 * d * d + 12 * g * g * d +
           12 * g * d * q + 3 * q * q * d - 36 * g * d - 18 * d * q + 24 * d - 2 * q * q;
}

void push(LocalizationRelation& rel, std::string label, Rational alpha_part, Rational beta_part) {
    rel.alpha += alpha_part;
    rel.beta += beta_part;
    rel.contributions.push_back({std::move(label), std::move(alpha_part), std::move(beta_part)});
}

} // namespace

DegenerateRelationError::DegenerateRelationError(LocalizationRelation rel)
    : Error(degenerate_message(rel)), relation(std::move(rel)) {}

FixedLocusData fixed_locus_data(const MonodromyDatum& datum) {
    if (datum.n() != 4) {
        throw DimensionError("fixed_locus_data: needs a 4-pointed space, got n = " +
                             std::to_string(datum.n()));
    }
    const Integer& d = datum.d();
    FixedLocusData out;
    const CoverInvariants inv = cover_invariants(datum);
    out.genus = inv.genus;
    for (int i = 0; i < 4; ++i) {
        out.q[static_cast<std::size_t>(i)] = inv.q[static_cast<std::size_t>(i)];
    }
    const std::array<std::pair<int, int>, 3> index_pairs = {{{1, 2}, {1, 3}, {2, 3}}};
    for (std::size_t t = 0; t < 3; ++t) {
        const auto [i, j] = index_pairs[t];
        FixedLocusData::PairLocus locus;
        locus.i = i;
        locus.j = j;
        locus.q_ij = gcd_with(datum.m(i) + datum.m(j), d);
        const Integer twice = out.q[static_cast<std::size_t>(i - 1)] +
                              out.q[static_cast<std::size_t>(j - 1)] + locus.q_ij - d;
        if (twice % 2 != 0) {
            throw CrossCheckError("fixed_locus_data: pair locus genus is not integral for " +
                                  describe(datum));
        }
        // may be negative: the contracting curve has gcd(m_i, m_j, d) components
        locus.g_ij = 1 - twice / 2;
        locus.components = gcd_with(gcd(datum.m(i), datum.m(j)), d);
        out.pairs[t] = std::move(locus);
    }
    return out;
}

LocalizationRelation orbifold_relation(const MonodromyDatum& datum, const Integer& e) {
    require_connected_4pt(datum, "orbifold_relation");
    if (e < 0 || e >= datum.d()) {
        throw ValidationError("orbifold_relation: character must lie in [0, d), got " + e.str());
    }
    std::array<Rational, 4> a = {age(datum, e, 1), age(datum, e, 2), age(datum, e, 3),
                                 age(datum, e, 4)};
    std::sort(a.begin(), a.end()); // relabel so the largest age sits at the last point
    const Rational total = a[0] + a[1] + a[2] + a[3];
    if (total != 2 || a[0] + a[3] <= 1) {
        throw UnsupportedError("orbifold_relation: no relation for " + describe(datum) +
                               ", e = " + e.str() + " (sorted ages sum to " +
                               to_fraction_string(total) + ", smallest+largest = " +
                               to_fraction_string(a[0] + a[3]) +
                               "); need sum 2 with smallest+largest > 1");
    }
    LocalizationRelation rel;
    push(rel, "Gamma_{}", 0, 0);
    push(rel, "Gamma_{1}", a[0], 0);
    push(rel, "Gamma_{2}", a[1], 0);
    push(rel, "Gamma_{3}", a[2], 0);
    push(rel, "Gamma_{1,2,3}", a[3] - 1, (a[3] - 1) / datum.d());
    push(rel, "Gamma_{1,2}", 0, 0);
    push(rel, "Gamma_{1,3}", 0, 0);
    push(rel, "Gamma_{2,3}", 0, 0);
    if (rel.alpha != 1) { // age sum 2 forces alpha = 1
        throw CrossCheckError("orbifold_relation: alpha = " + to_fraction_string(rel.alpha) +
                              " instead of 1 for " + describe(datum) + ", e = " + e.str());
    }
    return rel;
}

LocalizationRelation nonorbifold_relation(const MonodromyDatum& datum) {
    require_connected_4pt(datum, "nonorbifold_relation");
    const Integer& d = datum.d();
    const FixedLocusData loc = fixed_locus_data(datum);
    const Integer& g = loc.genus;
    const Integer scale = 24 * d * d;

    LocalizationRelation rel;
    push(rel, "Gamma_{}", 0, 0);
    for (int j = 1; j <= 3; ++j) {
        const Integer& qj = loc.q[static_cast<std::size_t>(j - 1)];
        const Integer tail = (d - qj) * (3 * d * d - 3 * d * qj - 4 * d + 2 * qj);
        push(rel, "Gamma_{" + std::to_string(j) + "}", Rational(d - qj, 2),
             -Rational(tail, scale));
    }
    push(rel, "Gamma_{1,2,3}", Rational(4 - d - loc.q[3] - 2 * g, 2),
         -Rational(locus_constant(d, g, loc.q[3]), scale));
    for (const auto& p : loc.pairs) {
        push(rel, "Gamma_{" + std::to_string(p.i) + "," + std::to_string(p.j) + "}", 0,
             Rational(locus_constant(d, p.g_ij, p.q_ij), scale));
    }
    return rel;
}

Rational solve(const LocalizationRelation& relation) {
    if (relation.alpha == 0) {
        throw DegenerateRelationError(relation);
    }
    return -relation.beta / relation.alpha;
}

Json to_json(const LocalizationRelation& relation) {
    Json rows = Json::array();
    for (const auto& c : relation.contributions) {
        Json row;
        row["locus"] = c.label;
        row["alpha"] = to_fraction_string(c.alpha_part);
        row["beta"] = to_fraction_string(c.beta_part);
        rows.push_back(std::move(row));
    }
    Json out;
    out["alpha"] = to_fraction_string(relation.alpha);
    out["beta"] = to_fraction_string(relation.beta);
    out["contributions"] = std::move(rows);
    return out;
}

Json localization_report(const MonodromyDatum& datum) {
    const LocalizationRelation rel = nonorbifold_relation(datum);
    const Rational solved = solve(rel);
    const Rational closed = lambda1_degree(datum);
    Json out;
    Json dj;
    dj["d"] = json_int(datum.d());
    Json ms = Json::array();
    for (int i = 1; i <= datum.n(); ++i) {
        ms.push_back(json_int(datum.m(i)));
    }
    dj["m"] = std::move(ms);
    dj["connected"] = datum.is_connected();
    out["datum"] = std::move(dj);
    out["relation"] = to_json(rel);
    out["solved"] = to_fraction_string(solved);
    out["closed_form"] = to_fraction_string(closed);
    out["match"] = (solved == closed);
    return out;
}

} // namespace hodge
