#pragma once

#include <array>

#include "hodge/monodromy.hpp"
#include "hodge/rational.hpp"

namespace hodge {

// The degree of lambda_1^e on a 4-pointed space falls into five mutually
// exclusive numerical cases, indexed by the age sum (an integer in {0,1,2,3})
// and, when the sum is 2, by whether the smallest and largest ages together
// exceed 1. The degree vanishes except in the two middle cases.
enum class Lambda1eCaseId {
    age_sum_zero,
    age_sum_one,
    age_sum_two_low,  // a_min + a_max <= 1, degree a_min / d
    age_sum_two_high, // a_min + a_max >  1, degree (1 - a_max) / d
    age_sum_three,
};

struct Lambda1eCase {
    Lambda1eCaseId case_id;
    std::array<Rational, 4> sorted_ages; // nondecreasing
    Integer d;

    // degree prescribed by the case
    Rational value() const;
};

Lambda1eCase classify_lambda1e(const MonodromyDatum& datum, const Integer& e);

// Degree of lambda_1^e on a 4-pointed space, for a connected datum and
// 0 <= e < d. Evaluates both the min form
//   min{a_min/d, sum-1}            when a_min + a_max <= 1
//   min{(1-a_max)/d, 3-sum}        otherwise
// (bypassed to 0 when every age vanishes) and the five-case form, and aborts
// with CrossCheckError if they ever disagree.
Rational lambda1e_degree(const MonodromyDatum& datum, const Integer& e);

// Degree of lambda_1 on a 4-pointed space: the alternating power-set sum
//   (1/(24 d^2)) sum_{I subset of {1,2,3,4}} (-1)^|I| gcd^2(sum_I m_i, d).
Rational lambda1_degree(const MonodromyDatum& datum);

// Same degree with complementary subsets folded together:
//   (1/(12 d^2)) (d^2 - sum_i gcd^2(m_i, d) + sum_{i<4} gcd^2(m_i + m_4, d)).
Rational lambda1_degree_compact(const MonodromyDatum& datum);

enum class PrimeCase {
    contains_zero,             // degree 0
    no_inverse_pair,           // (p^2 - 1) / (12 p^2)
    two_distinct_inverse_pairs, // (p^2 - 1) / (6 p^2)
    repeated_inverse_pair,     // (p^2 - 1) / (4 p^2)
};

const char* to_string(PrimeCase c);

struct PrimeDegree {
    Rational value;
    PrimeCase case_label;
};

// Degree of lambda_1 when d is an odd prime, by classifying the monodromy
// multiset: a zero entry, no pair summing to 0 mod p, two distinct such
// pairs, or one such pair repeated. Other degrees are refused
// (UnsupportedError); d = 2 genuinely falls outside this classification.
PrimeDegree lambda1_degree_prime(const MonodromyDatum& datum);

// Integral of psi_1^{k_1} ... psi_n^{k_n} over an n-pointed space:
// (1/d) * (n-3)! / prod(k_i!). Requires one exponent per point with
// sum(k_i) = n - 3.
Rational psi_integral(const MonodromyDatum& datum, const std::vector<Integer>& k);

} // namespace hodge
