#include <doctest.h>

#include "hodge/degrees.hpp"
#include "hodge/localization.hpp"

using namespace hodge;

namespace {

MonodromyDatum datum_of(long long d, std::vector<long long> m) {
    std::vector<Integer> mm(m.begin(), m.end());
    return MonodromyDatum(Integer(d), std::move(mm));
}

const LocusContribution& row(const LocalizationRelation& rel, const std::string& label) {
    for (const auto& c : rel.contributions) {
        if (c.label == label) {
            return c;
        }
    }
    throw std::runtime_error("no contribution labeled " + label);
}

} // namespace

TEST_SUITE_BEGIN("localization");

TEST_CASE("fixed locus data") {
    const FixedLocusData loc = fixed_locus_data(datum_of(6, {2, 4, 3, 3}));
    CHECK(loc.genus == 2);
    CHECK(loc.q == std::array<Integer, 4>{2, 2, 3, 3});

    CHECK(loc.pairs[0].i == 1);
    CHECK(loc.pairs[0].j == 2);
    CHECK(loc.pairs[0].q_ij == 6);
    CHECK(loc.pairs[0].g_ij == -1); // disconnected contracting curve
    CHECK(loc.pairs[0].components == 2);

    CHECK(loc.pairs[1].q_ij == 1);
    CHECK(loc.pairs[1].g_ij == 1);
    CHECK(loc.pairs[1].components == 1);
    CHECK(loc.pairs[2].q_ij == 1);
    CHECK(loc.pairs[2].g_ij == 1);

    const FixedLocusData base = fixed_locus_data(datum_of(5, {1, 4, 2, 3}));
    CHECK(base.genus == 4);
    CHECK(base.q == std::array<Integer, 4>{1, 1, 1, 1});
    CHECK(base.pairs[0].q_ij == 5); // m_1 + m_2 = d
    CHECK(base.pairs[0].g_ij == 0);
    CHECK(base.pairs[1].g_ij == 2);
    CHECK(base.pairs[2].g_ij == 2);

    CHECK_THROWS_AS(fixed_locus_data(datum_of(3, {1, 1, 1, 1, 2})), DimensionError);
}

TEST_CASE("relation for the full degree, frozen rows") {
    const LocalizationRelation rel = nonorbifold_relation(datum_of(5, {1, 4, 2, 3}));
    CHECK(rel.contributions.size() == 8);
    CHECK(row(rel, "Gamma_{}").alpha_part == 0);
    CHECK(row(rel, "Gamma_{}").beta_part == 0);
    CHECK(row(rel, "Gamma_{1}").alpha_part == 2);
    CHECK(row(rel, "Gamma_{1}").beta_part == Rational(-7, 25));
    CHECK(row(rel, "Gamma_{2}").beta_part == Rational(-7, 25));
    CHECK(row(rel, "Gamma_{3}").beta_part == Rational(-7, 25));
    CHECK(row(rel, "Gamma_{1,2,3}").alpha_part == -5);
    CHECK(row(rel, "Gamma_{1,2,3}").beta_part == Rational(-77, 25));
    CHECK(row(rel, "Gamma_{1,2}").alpha_part == 0);
    CHECK(row(rel, "Gamma_{1,2}").beta_part == Rational(6, 5));
    CHECK(row(rel, "Gamma_{1,3}").beta_part == Rational(32, 25));
    CHECK(row(rel, "Gamma_{2,3}").beta_part == Rational(32, 25));

    CHECK(rel.alpha == 1);
    CHECK(rel.beta == Rational(-4, 25));
    CHECK(solve(rel) == Rational(4, 25));
    CHECK(solve(rel) == lambda1_degree(datum_of(5, {1, 4, 2, 3})));
}

TEST_CASE("relation for the full degree handles negative pair genus") {
    const LocalizationRelation rel = nonorbifold_relation(datum_of(6, {2, 4, 3, 3}));
    CHECK(solve(rel) == Rational(1, 9));
    CHECK(solve(rel) == lambda1_degree(datum_of(6, {2, 4, 3, 3})));
}

TEST_CASE("relation for a single character, frozen rows") {
    const LocalizationRelation rel = orbifold_relation(datum_of(6, {1, 3, 4, 4}), 5);
    CHECK(rel.contributions.size() == 8);
    CHECK(row(rel, "Gamma_{1}").alpha_part == Rational(1, 3));
    CHECK(row(rel, "Gamma_{2}").alpha_part == Rational(1, 3));
    CHECK(row(rel, "Gamma_{3}").alpha_part == Rational(1, 2));
    CHECK(row(rel, "Gamma_{1,2,3}").alpha_part == Rational(-1, 6));
    CHECK(row(rel, "Gamma_{1,2,3}").beta_part == Rational(-1, 36));
    CHECK(row(rel, "Gamma_{1,2}").alpha_part == 0);
    CHECK(row(rel, "Gamma_{1,2}").beta_part == 0);
    CHECK(rel.alpha == 1);
    CHECK(solve(rel) == Rational(1, 36));
    CHECK(solve(rel) == lambda1e_degree(datum_of(6, {1, 3, 4, 4}), 5));

    const LocalizationRelation other = orbifold_relation(datum_of(5, {3, 4, 4, 4}), 3);
    CHECK(other.alpha == 1);
    CHECK(other.beta == Rational(-1, 25));
    CHECK(solve(other) == Rational(1, 25));
}

TEST_CASE("characters outside the informative window are refused") {
    const MonodromyDatum datum = datum_of(5, {3, 4, 4, 4});
    CHECK_THROWS_AS(orbifold_relation(datum, 0), UnsupportedError); // age sum 0
    CHECK_THROWS_AS(orbifold_relation(datum, 1), UnsupportedError); // age sum 3
    CHECK_THROWS_AS(orbifold_relation(datum, 2), UnsupportedError); // sum 2, smallest+largest <= 1
    CHECK_THROWS_AS(orbifold_relation(datum, 4), UnsupportedError); // age sum 1
    // symmetric ages hit smallest+largest exactly 1
    CHECK_THROWS_AS(orbifold_relation(datum_of(5, {1, 4, 2, 3}), 1), UnsupportedError);
    CHECK_THROWS_AS(orbifold_relation(datum, Integer(-1)), ValidationError);
    CHECK_THROWS_AS(orbifold_relation(datum, 5), ValidationError);
}

TEST_CASE("both relations require a connected 4-pointed datum") {
    CHECK_THROWS_AS(nonorbifold_relation(datum_of(3, {1, 1, 1, 1, 2})), DimensionError);
    CHECK_THROWS_AS(nonorbifold_relation(datum_of(4, {0, 0, 2, 2})), ValidationError);
    CHECK_THROWS_AS(orbifold_relation(datum_of(4, {0, 0, 2, 2}), 1), ValidationError);
}

TEST_CASE("degenerate relations are reported with their rows") {
    LocalizationRelation rel;
    rel.alpha = 0;
    rel.beta = Rational(3, 7);
    rel.contributions.push_back({"Gamma_{1}", Rational(1, 2), 0});
    rel.contributions.push_back({"Gamma_{2}", Rational(-1, 2), Rational(3, 7)});
    CHECK_THROWS_AS(solve(rel), DegenerateRelationError);
    try {
        solve(rel);
    } catch (const DegenerateRelationError& err) {
        CHECK(err.relation.beta == Rational(3, 7));
        CHECK(err.relation.contributions.size() == 2);
        CHECK(std::string(err.what()).find("alpha = 0") != std::string::npos);
        CHECK(std::string(err.what()).find("Gamma_{2}") != std::string::npos);
    }
}

TEST_CASE("solved relations agree with the closed forms on a sweep") {
    int informative = 0;
    for (Integer d = 1; d <= 8; ++d) {
        for (const MonodromyDatum& datum : enumerate_data(d)) {
            CHECK(solve(nonorbifold_relation(datum)) == lambda1_degree(datum));
            for (Integer e = 1; e < d; ++e) {
                LocalizationRelation rel;
                try {
                    rel = orbifold_relation(datum, e);
                } catch (const UnsupportedError&) {
                    continue; // vanishing or symmetry-determined characters carry no relation
                }
                CHECK(solve(rel) == lambda1e_degree(datum, e));
                ++informative;
            }
        }
    }
    CHECK(informative > 0);
}

TEST_CASE("relation JSON carries every row") {
    const Json j = to_json(nonorbifold_relation(datum_of(5, {1, 4, 2, 3})));
    CHECK(j.at("alpha") == "1");
    CHECK(j.at("beta") == "-4/25");
    CHECK(j.at("contributions").size() == 8);
    CHECK(j.at("contributions")[0].at("locus") == "Gamma_{}");
    CHECK(j.at("contributions")[4].at("alpha") == "-5");

    const Json report = localization_report(datum_of(5, {1, 4, 2, 3}));
    CHECK(report.at("solved") == "4/25");
    CHECK(report.at("closed_form") == "4/25");
    CHECK(report.at("match") == true);
    CHECK(report.at("datum").at("d") == 5);
}

TEST_SUITE_END();
