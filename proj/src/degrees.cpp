#include "hodge/degrees.hpp"

#include <algorithm>
#include <utility>

namespace hodge {

namespace {

void require_4pt(const MonodromyDatum& datum, const char* what) {
    if (datum.n() != 4) {
        throw DimensionError(std::string(what) + ": needs a 4-pointed space, got n = " +
                             std::to_string(datum.n()));
    }
}

} // namespace

Rational Lambda1eCase::value() const {
    switch (case_id) {
    case Lambda1eCaseId::age_sum_zero:
    case Lambda1eCaseId::age_sum_one:
    case Lambda1eCaseId::age_sum_three:
        return 0;
    case Lambda1eCaseId::age_sum_two_low:
        return sorted_ages[0] / d;
    case Lambda1eCaseId::age_sum_two_high:
        return (1 - sorted_ages[3]) / d;
    }
    throw CrossCheckError("lambda_1^e case: unreachable");
}

Lambda1eCase classify_lambda1e(const MonodromyDatum& datum, const Integer& e) {
    require_4pt(datum, "classify_lambda1e");
    std::array<Rational, 4> ages = {age(datum, e, 1), age(datum, e, 2), age(datum, e, 3),
                                    age(datum, e, 4)};
    std::sort(ages.begin(), ages.end());
    const Rational total = ages[0] + ages[1] + ages[2] + ages[3];
    if (denominator(total) != 1 || total < 0 || total > 3) {
        throw CrossCheckError("age sum " + to_fraction_string(total) +
                              " outside {0,1,2,3} for " + describe(datum) + ", e = " + e.str());
    }
    Lambda1eCaseId id;
    if (total == 0) {
        id = Lambda1eCaseId::age_sum_zero;
    } else if (total == 1) {
        id = Lambda1eCaseId::age_sum_one;
    } else if (total == 3) {
        id = Lambda1eCaseId::age_sum_three;
    } else {
        id = (ages[0] + ages[3] <= 1) ? Lambda1eCaseId::age_sum_two_low
                                      : Lambda1eCaseId::age_sum_two_high;
    }
    return {id, std::move(ages), datum.d()};
}

Rational lambda1e_degree(const MonodromyDatum& datum, const Integer& e) {
    require_4pt(datum, "lambda1e_degree");
    if (!datum.is_connected()) {
        throw ValidationError("lambda1e_degree: datum " + describe(datum) +
                              " is disconnected; the eigenbundle degrees assume a connected cover");
    }
    const Lambda1eCase cs = classify_lambda1e(datum, e);
    const Rational case_value = cs.value();

    Rational min_value = 0; // all ages vanishing means a trivial bundle
    if (cs.case_id != Lambda1eCaseId::age_sum_zero) {
        const auto& a = cs.sorted_ages;
        const Rational total = a[0] + a[1] + a[2] + a[3];
        if (a[0] + a[3] <= 1) {
            min_value = std::min(Rational(a[0] / datum.d()), Rational(total - 1));
        } else {
            min_value = std::min(Rational((1 - a[3]) / datum.d()), Rational(3 - total));
        }
    }
    if (min_value != case_value) {
        throw CrossCheckError("lambda_1^e forms disagree for " + describe(datum) +
                              ", e = " + e.str() + ": min form " + to_fraction_string(min_value) +
                              ", case form " + to_fraction_string(case_value));
    }
    return case_value;
}

Rational lambda1_degree(const MonodromyDatum& datum) {
    require_4pt(datum, "lambda1_degree");
    const Integer& d = datum.d();
    Integer acc = 0;
    for (unsigned mask = 0; mask < 16; ++mask) {
        Integer sum = 0;
        int bits = 0;
        for (int i = 0; i < 4; ++i) {
            if (mask & (1u << i)) {
                sum += datum.m(i + 1);
                ++bits;
            }
        }
        const Integer g = gcd_with(sum, d);
        if (bits % 2 == 0) {
            acc += g * g;
        } else {
            acc -= g * g;
        }
    }
    return Rational(acc, 24 * d * d);
}

Rational lambda1_degree_compact(const MonodromyDatum& datum) {
    require_4pt(datum, "lambda1_degree_compact");
    const Integer& d = datum.d();
    Integer acc = d * d;
    for (int i = 1; i <= 4; ++i) {
        const Integer g = gcd_with(datum.m(i), d);
        acc -= g * g;
    }
    for (int i = 1; i <= 3; ++i) {
        const Integer g = gcd_with(datum.m(i) + datum.m(4), d);
        acc += g * g;
    }
    return Rational(acc, 12 * d * d);
}

const char* to_string(PrimeCase c) {
    switch (c) {
    case PrimeCase::contains_zero:
        return "contains_zero";
    case PrimeCase::no_inverse_pair:
        return "no_inverse_pair";
    case PrimeCase::two_distinct_inverse_pairs:
        return "two_distinct_inverse_pairs";
    case PrimeCase::repeated_inverse_pair:
        return "repeated_inverse_pair";
    }
    return "unknown";
}

PrimeDegree lambda1_degree_prime(const MonodromyDatum& datum) {
    require_4pt(datum, "lambda1_degree_prime");
    const Integer& p = datum.d();
    if (!is_odd_prime(p)) {
        throw UnsupportedError("lambda1_degree_prime: degree must be an odd prime, got " +
                               p.str());
    }
    for (int i = 1; i <= 4; ++i) {
        if (datum.m(i) == 0) {
            return {Rational(0), PrimeCase::contains_zero};
        }
    }
    // no zero entries: look for an unordered pair summing to 0 mod p
    int first = 0, second = 0;
    for (int i = 1; i <= 4 && first == 0; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            if ((datum.m(i) + datum.m(j)) % p == 0) {
                first = i;
                second = j;
                break;
            }
        }
    }
    const Integer pp = p * p;
    if (first == 0) {
        return {Rational(pp - 1, 12 * pp), PrimeCase::no_inverse_pair};
    }
    int third = 0, fourth = 0;
    for (int i = 1; i <= 4; ++i) {
        if (i != first && i != second) {
            (third == 0 ? third : fourth) = i;
        }
    }
    if ((datum.m(third) + datum.m(fourth)) % p != 0) {
        // the total sum is 0 mod p, so the complement of an inverse pair is one too
        throw CrossCheckError("lambda1_degree_prime: inconsistent pair structure for " +
                              describe(datum));
    }
    std::pair<Integer, Integer> a{datum.m(first), datum.m(second)};
    std::pair<Integer, Integer> b{datum.m(third), datum.m(fourth)};
    if (a.first > a.second) {
        std::swap(a.first, a.second);
    }
    if (b.first > b.second) {
        std::swap(b.first, b.second);
    }
    if (a == b) {
        return {Rational(pp - 1, 4 * pp), PrimeCase::repeated_inverse_pair};
    }
    return {Rational(pp - 1, 6 * pp), PrimeCase::two_distinct_inverse_pairs};
}

Rational psi_integral(const MonodromyDatum& datum, const std::vector<Integer>& k) {
    if (static_cast<int>(k.size()) != datum.n()) {
        throw DimensionError("psi_integral: need one exponent per branch point, got " +
                             std::to_string(k.size()) + " for n = " + std::to_string(datum.n()));
    }
    Integer total = 0;
    for (const Integer& ki : k) {
        if (ki < 0) {
            throw ValidationError("psi_integral: exponents must be nonnegative");
        }
        total += ki;
    }
    if (total != datum.n() - 3) {
        throw DimensionError("psi_integral: exponents sum to " + total.str() +
                             ", dimension is " + std::to_string(datum.n() - 3));
    }
    return Rational(multinomial(k), datum.d());
}

} // namespace hodge
