#include "flatstir/enumeration.hpp"
#include "flatstir/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace flatstir {

namespace {

using Rational = boost::multiprecision::cpp_rational;

Rational pow_rational(const Rational& base, unsigned exponent) {
    Rational out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

struct Enclosure {
    Rational lo;
    Rational hi;
};

// Bounds for e^(-1/m) from consecutive partial sums of the alternating series.
Enclosure exp_neg_inverse(unsigned m, unsigned terms) {
    Rational sum = 0;
    Rational term = 1;
    for (unsigned j = 0; j <= terms; ++j) {
        sum += term;
        term *= Rational(-1, m);
        term /= j + 1;
    }
    const Rational next = sum + term;
    return sum < next ? Enclosure{sum, next} : Enclosure{next, sum};
}

}  // namespace

BigCount flatm_series(unsigned n, unsigned m, const SeriesOptions& options) {
    if (m < 2) throw DomainError("flatm_series needs m >= 2");
    const unsigned exponent = n == 0 ? 0 : n - 1;

    // t_k = (mk + m - 1)^e / (k! m^k)
    auto term = [&](unsigned k, const Rational& factorial_times_power) {
        return Rational(pow_rational(Rational(BigCount(m) * k + m - 1), exponent)) / factorial_times_power;
    };

    unsigned terms = std::max(1u, options.initial_terms);
    for (unsigned round = 0; round < options.max_rounds; ++round, terms *= 2) {
        Rational sum = 0;
        Rational denom = 1;  // k! m^k
        for (unsigned k = 0; k <= terms; ++k) {
            if (k > 0) denom *= Rational(BigCount(k) * m);
            sum += term(k, denom);
        }
        // Ratios t_{j+1}/t_j decrease in j, so the tail after K is at most
        // t_{K+1} / (1 - t_{K+2}/t_{K+1}).
        const Rational denom1 = denom * (BigCount(terms + 1) * m);
        const Rational denom2 = denom1 * (BigCount(terms + 2) * m);
        const Rational t1 = term(terms + 1, denom1);
        const Rational t2 = term(terms + 2, denom2);
        const Rational ratio = t2 / t1;
        if (ratio >= 1) continue;
        const Rational tail = t1 / (1 - ratio);

        const Enclosure e = exp_neg_inverse(m, terms);
        const Rational lo = e.lo * sum;
        const Rational hi = e.hi * (sum + tail);
        const Rational mid = (lo + hi) / 2;
        BigCount nearest = numerator(mid + Rational(1, 2)) / denominator(mid + Rational(1, 2));
        const Rational quarter(1, 4);
        if (lo > Rational(nearest) - quarter && hi < Rational(nearest) + quarter) return nearest;
    }
    throw PrecisionInsufficient("flatm_series(" + std::to_string(n) + ", " + std::to_string(m) +
                                "): could not certify rounding within " +
                                std::to_string(options.max_rounds) + " rounds");
}

}  // namespace flatstir
