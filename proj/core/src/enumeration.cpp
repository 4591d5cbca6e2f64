#include "flatstir/enumeration.hpp"

#include "flatstir/bijection.hpp"
#include "flatstir/errors.hpp"

#include <vector>

namespace flatstir {

BigCount double_factorial(unsigned n) {
    BigCount out = 1;
    for (unsigned i = 1; i <= n; ++i) out *= 2 * i - 1;
    return out;
}

BigCount binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigCount out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

namespace {

std::vector<std::vector<BigCount>> stirling2_table(unsigned a_max) {
    std::vector<std::vector<BigCount>> s(a_max + 1, std::vector<BigCount>(a_max + 1, 0));
    s[0][0] = 1;
    for (unsigned a = 1; a <= a_max; ++a) {
        for (unsigned b = 1; b <= a; ++b) s[a][b] = BigCount(b) * s[a - 1][b] + s[a - 1][b - 1];
    }
    return s;
}

}  // namespace

BigCount stirling2(unsigned a, unsigned b) {
    if (b > a) return 0;
    return stirling2_table(a)[a][b];
}

BigCount dowling(unsigned n) {
    const auto s = stirling2_table(n);
    BigCount total = 0;
    for (unsigned i = 0; i <= n; ++i) {
        const unsigned rest = n - i;
        BigCount inner = 0;
        for (unsigned k = 0; k <= rest; ++k) {
            inner += (BigCount(1) << (rest - k)) * s[rest][k];
        }
        total += binomial(n, i) * inner;
    }
    return total;
}

BigCount flat2_recurrence(unsigned n) {
    if (n == 0) throw DomainError("flat2_recurrence needs n >= 1");
    BigCount value = 0;
    for (unsigned k = 1; k < n; ++k) value = 2 * value + (2 * BigCount(k) - 1);
    return value;
}

BigCount flat2_closed(unsigned n) {
    if (n == 0) throw DomainError("flat2_closed needs n >= 1");
    return 3 * ((BigCount(1) << n) - 1) - 2 * BigCount(n);
}

unsigned max_runs(unsigned n) {
    if (n == 0) throw DomainError("max_runs needs n >= 1");
    return (2 * n + 2) / 3;
}

StirlingWord max_runs_witness(unsigned n) {
    if (n == 0) throw DomainError("max_runs_witness needs n >= 1");
    // Partition of [-(n-1), n-1]. The zero-block takes {0, 2} (or {0, 1} when
    // n = 2) for one descent; every following block consumes three values as
    // -b a c (two descents), a trailing pair as -b a (one), a single as a (none).
    TypeBPartition p;
    p.n = n - 1;
    std::vector<unsigned> pool;
    if (n == 2) {
        p.zero_block = {0, 1};
    } else if (n >= 3) {
        p.zero_block = {0, 2};
        pool.push_back(1);
        for (unsigned v = 3; v < n; ++v) pool.push_back(v);
    }
    for (std::size_t i = 0; i < pool.size(); i += 3) {
        SignedBlock b;
        b.positives.push_back(pool[i]);
        if (i + 1 < pool.size()) b.negatives.push_back(pool[i + 1]);
        if (i + 2 < pool.size()) b.positives.push_back(pool[i + 2]);
        p.blocks.push_back(std::move(b));
    }
    return phi(p, CheckOutput::yes);
}

BigCount flat3_conjecture(unsigned n) {
    if (n == 0) throw DomainError("flat3_conjecture needs n >= 1");
    const unsigned top = n - 1;
    auto inner = [&](unsigned k) {
        // sum_{j=2}^{n-1-k} C(n-1-k, j); empty when n-1-k < 2
        BigCount sum = 0;
        if (k > top) return sum;
        const unsigned upper = top - k;
        for (unsigned j = 2; j <= upper; ++j) sum += binomial(upper, j);
        return sum;
    };
    BigCount first = 0, second = 0, third = 0;
    for (unsigned k = 1; k <= top; ++k) first += binomial(top, k) * inner(k);
    for (unsigned k = 2; k <= top; ++k) second += binomial(top, k) * inner(k);
    for (unsigned k = 3; k <= top; ++k) third += ((BigCount(1) << (k - 1)) - 2) * binomial(top, k);
    return 2 * first + second + third;
}

BigCount mstirling_count(unsigned n, unsigned m) { return stirling_word_count(n, m); }

BigCount flatm_recurrence(unsigned n, unsigned m) {
    if (m < 2) throw DomainError("flatm_recurrence needs m >= 2");
    if (n <= 1) return 1;
    const unsigned last = n - 1;
    std::vector<BigCount> a(last + 1);
    a[0] = 1;
    for (unsigned j = 1; j <= last; ++j) {
        BigCount value = BigCount(m - 1) * a[j - 1];
        BigCount power = 1;
        for (unsigned k = 1; k <= j; ++k) {
            value += binomial(j - 1, k - 1) * power * a[j - k];
            power *= m;
        }
        a[j] = value;
    }
    return a[last];
}

}  // namespace flatstir
