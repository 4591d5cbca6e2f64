"""Regenerates the b-file fixtures in this directory.

The sandbox that produced these files had no route to oeis.org, so each
sequence is expanded from its generating function (truncated power series
over the rationals) instead of being downloaded. Offsets follow the OEIS
entries: every sequence here starts at index 0.
"""
from fractions import Fraction
from math import factorial

TERMS = 20


def series_exp(f, count):
    # g = exp(f) via g' = f' g, g(0) = 1; requires f[0] == 0
    assert f[0] == 0
    g = [Fraction(0)] * count
    g[0] = Fraction(1)
    for n in range(1, count):
        g[n] = sum(k * f[k] * g[n - k] for k in range(1, n + 1)) / n
    return g


def flat_m_egf(m, count):
    # exp((m-1) x + (exp(m x) - 1) / m)
    f = [Fraction(0)] * count
    for i in range(1, count):
        f[i] = Fraction(m ** i, factorial(i) * m)
    f[1] += m - 1
    g = series_exp(f, count)
    return [g[i] * factorial(i) for i in range(count)]


def divide(series, denom):
    out = [Fraction(0)] * len(series)
    for i in range(len(series)):
        acc = series[i] - sum(denom[j] * out[i - j] for j in range(1, min(i, len(denom) - 1) + 1))
        out[i] = Fraction(acc) / denom[0]
    return out


def a050488(count):
    # x (1 + x) / ((1-x)^2 (1-2x))
    s = [Fraction(0)] * count
    s[1] = Fraction(1)
    s[2] = Fraction(1)
    s = divide(s, [1, -1])
    s = divide(s, [1, -1])
    return divide(s, [1, -2])


def write(seq_id, title, values):
    with open(f"b{seq_id[1:]}.txt", "w") as fh:
        fh.write(f"# {seq_id}: {title}\n")
        fh.write("# regenerated from the generating function by make_bfiles.py\n")
        for i, v in enumerate(values):
            assert v.denominator == 1
            fh.write(f"{i} {v.numerator}\n")


if __name__ == "__main__":
    write("A007405", "Dowling numbers, e.g.f. exp(x + (exp(2x)-1)/2)", flat_m_egf(2, TERMS))
    write("A050488", "3*(2^n-1)-2n, g.f. x(1+x)/((1-x)^2*(1-2x))", a050488(TERMS))
    write("A355164", "e.g.f. exp(2x + (exp(3x)-1)/3)", flat_m_egf(3, TERMS))
    write("A355167", "e.g.f. exp(3x + (exp(4x)-1)/4)", flat_m_egf(4, TERMS))
