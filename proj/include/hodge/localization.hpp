#pragma once

#include <array>
#include <string>
#include <vector>

#include "hodge/json_util.hpp"
#include "hodge/monodromy.hpp"
#include "hodge/rational.hpp"

namespace hodge {

// One fixed-locus row of an assembled relation.
struct LocusContribution {
    std::string label; // "Gamma_{}", "Gamma_{2}", "Gamma_{1,3}", "Gamma_{1,2,3}"
    Rational alpha_part;
    Rational beta_part;
};

// Linear relation alpha * L + beta = 0 in the unknown degree L, obtained by
// summing the residues of an equivariant class over the fixed loci of the
// torus action. alpha and beta are always the exact sums of the per-locus
// parts.
struct LocalizationRelation {
    Rational alpha;
    Rational beta;
    std::vector<LocusContribution> contributions;
};

// alpha vanished, so the relation determines nothing.
struct DegenerateRelationError : Error {
    LocalizationRelation relation;
    explicit DegenerateRelationError(LocalizationRelation rel);
};

// Discrete invariants of the fixed loci on a 4-pointed space. The loci are
// indexed by the subsets of the first three points sent to the zero section;
// only the pair loci need extra data. g_ij is the arithmetic genus of the
// curve contracting over infinity in the pair locus, which is disconnected
// whenever gcd(m_i, m_j, d) > 1 and can then have negative genus.
struct FixedLocusData {
    Integer genus;
    std::array<Integer, 4> q; // q_i = gcd(m_i, d)
    struct PairLocus {
        int i, j; // 1-based, i < j <= 3
        Integer q_ij;
        Integer g_ij;
        Integer components; // gcd(m_i, m_j, d)
    };
    std::array<PairLocus, 3> pairs; // {1,2}, {1,3}, {2,3}
};

FixedLocusData fixed_locus_data(const MonodromyDatum& datum);

// Relation determining the lambda_1^e degree on a 4-pointed space, in the
// numerical situation where the sorted ages sum to 2 with smallest + largest
// greater than 1 (points are relabeled internally so the largest age sits at
// the last point). The remaining cases carry no information beyond vanishing
// and the e <-> d-e symmetry and are refused with UnsupportedError. In this
// situation alpha is identically 1, which is asserted.
LocalizationRelation orbifold_relation(const MonodromyDatum& datum, const Integer& e);

// Relation determining the lambda_1 degree on a 4-pointed space for a
// connected datum; the last marked point is the one sent to infinity.
LocalizationRelation nonorbifold_relation(const MonodromyDatum& datum);

// -beta / alpha; DegenerateRelationError when alpha = 0.
Rational solve(const LocalizationRelation& relation);

Json to_json(const LocalizationRelation& relation);

// Diagnostic record for the nonorbifold route to the full lambda_1 degree:
// the assembled relation, its solved value, and the closed-form value it
// must reproduce.
Json localization_report(const MonodromyDatum& datum);

} // namespace hodge
