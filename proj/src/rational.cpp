#include "hodge/rational.hpp"

#include <cstddef>
#include <cstdlib>

namespace hodge {

Rational frac_part(const Integer& a, const Integer& b) {
    if (b < 1) {
        throw ValidationError("frac_part: modulus must be positive, got " + b.str());
    }
    Integer r = a % b; // truncated division, r in (-b, b)
    if (r < 0) {
        r += b;
    }
    return Rational(r, b);
}

Integer gcd_with(const Integer& a, const Integer& d) {
    if (d < 1) {
        throw ValidationError("gcd_with: d must be positive, got " + d.str());
    }
    if (a == 0) {
        return d;
    }
    return gcd(Integer(abs(a)), d);
}

Integer multinomial(const std::vector<Integer>& parts) {
    Integer result = 1;
    Integer upper = 0;
    for (const Integer& k : parts) {
        if (k < 0) {
            throw ValidationError("multinomial: parts must be nonnegative, got " + k.str());
        }
        // multiply in binomial(upper + k, k) one factor at a time; each
        // stepwise division is exact
        for (Integer i = 1; i <= k; ++i) {
            ++upper;
            result *= upper;
            result /= i;
        }
    }
    return result;
}

bool is_odd_prime(const Integer& d) {
    if (d < 3 || d % 2 == 0) {
        return false;
    }
    for (Integer f = 3; f * f <= d; f += 2) {
        if (d % f == 0) {
            return false;
        }
    }
    return true;
}

std::string to_fraction_string(const Rational& x) {
    const Integer num = numerator(x);
    const Integer den = denominator(x);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view s) {
    const auto bad = [&] { return ValidationError("not a fraction: '" + std::string(s) + "'"); };
    if (s.empty()) {
        throw bad();
    }
    const std::size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(s)));
        }
        const Integer num{std::string(s.substr(0, slash))};
        const Integer den{std::string(s.substr(slash + 1))};
        if (den < 1) {
            throw bad();
        }
        return Rational(num, den);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

namespace {

Integer pow10(long k) {
    Integer p = 1;
    for (long i = 0; i < k; ++i) {
        p *= 10;
    }
    return p;
}

} // namespace

std::string to_decimal_string(const Rational& x, int digits) {
    if (digits < 1) {
        throw ValidationError("to_decimal_string: need at least one digit");
    }
    if (x == 0) {
        return "0";
    }
    Integer num = numerator(x);
    const Integer den = denominator(x);
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }

    // exp10 such that |x| lies in [10^(exp10-1), 10^exp10)
    long exp10 = 0;
    if (num >= den) {
        exp10 = static_cast<long>(Integer(num / den).str().size());
    } else {
        Integer scaled = num;
        while (scaled < den) {
            scaled *= 10;
            --exp10;
        }
        ++exp10;
    }

    // round(|x| * 10^(digits - exp10)), half away from zero
    Integer p_num = num;
    Integer p_den = den;
    const long shift = digits - exp10;
    if (shift >= 0) {
        p_num *= pow10(shift);
    } else {
        p_den *= pow10(-shift);
    }
    Integer q = p_num / p_den;
    const Integer r = p_num % p_den;
    if (2 * r >= p_den) {
        ++q;
    }
    if (q == pow10(digits)) { // rounding carried into a new leading digit
        q /= 10;
        ++exp10;
    }

    const std::string ds = q.str(); // exactly `digits` characters
    std::string out;
    if (exp10 > digits || exp10 < -3) {
        out = ds.substr(0, 1);
        if (digits > 1) {
            out += "." + ds.substr(1);
        }
        const long sci = exp10 - 1;
        out += "e";
        out += (sci < 0 ? "-" : "+");
        out += std::to_string(std::labs(sci));
    } else if (exp10 == digits) {
        out = ds;
    } else if (exp10 >= 1) {
        out = ds.substr(0, static_cast<std::size_t>(exp10)) + "." +
              ds.substr(static_cast<std::size_t>(exp10));
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + ds;
    }
    return negative ? "-" + out : out;
}

} // namespace hodge
