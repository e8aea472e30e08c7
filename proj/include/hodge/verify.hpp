#pragma once

#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

// Outcome of one exhaustive cross-validation sweep. Results are deterministic
// and independent of the worker count: cases are enumerated in a canonical
// order and merged back in that order.
struct SweepReport {
    std::string suite;
    unsigned long long checked = 0;
    unsigned long long failure_count = 0;
    // comparisons whose induced 4-pointed datum was disconnected; counted
    // separately because the geometric reading is weaker there
    unsigned long long caveats = 0;
    std::vector<std::string> failures; // details, capped at failure_detail_cap

    static constexpr std::size_t failure_detail_cap = 25;

    bool ok() const { return failure_count == 0; }
};

// Sum over e of the lambda_1^e degrees equals the lambda_1 degree, for every
// connected 4-pointed datum of degree <= dmax; also checks the folded form of
// the power-set sum and nonnegativity, and that a zero monodromy forces
// degree zero. Cases counted per datum.
SweepReport verify_eigen_sum(const Integer& dmax, int jobs = 1);

// lambda_1^e evaluates both its forms on every call; this sweep additionally
// checks the e <-> d-e symmetry and nonnegativity on every (datum, e) with
// d <= dmax. Cases counted per (datum, e).
SweepReport verify_lambda1e_consistency(const Integer& dmax, int jobs = 1);

// Prime-degree classification agrees with the power-set sum for every
// connected datum of odd prime degree p <= pmax.
SweepReport verify_prime_agreement(const Integer& pmax, int jobs = 1);

// Every nonorbifold relation (all 4 choices of the point sent to infinity)
// solves to the lambda_1 degree, and every orbifold relation that exists
// solves to the lambda_1^e degree, for connected data of degree <= dmax.
SweepReport verify_localization(const Integer& dmax, int jobs = 1);

// Pairing every boundary curve against the lambda_1 divisor expression
// reproduces the lambda_1 degree of the induced 4-pointed datum, for all
// connected n-pointed data with 4 <= n <= nmax and d <= dmax; canonicalizing
// must not change any pairing, and on n = 4 the degree of the expression must
// equal the closed form.
SweepReport verify_graph(const Integer& dmax, int nmax, int jobs = 1);

// The candidate 4-pointed divisor expression for lambda_1^e has degree equal
// to the lambda_1^e closed form for every (datum, e) with d <= dmax.
SweepReport verify_question(const Integer& dmax, int jobs = 1);

// Union of the degree-formula sweeps (eigen sum, per-character consistency,
// prime agreement), merged into one report.
SweepReport verify_identity(const Integer& dmax, int jobs = 1);

std::string format_report(const SweepReport& report);

} // namespace hodge
