"""Slow, direct reference computations used to pin down expected values."""

from fractions import Fraction
from itertools import combinations, product

from ctree.coeffring import UNIT, LaurentPoly
from ctree.shuffle import ZERO


def nested_sum(colors, weights, M):
    """sum over 0<n_1<...<n_r<M of prod a_i^(n_i - n_{i-1}) / n_i^k_i, term by term."""
    acc = LaurentPoly()
    for ns in combinations(range(1, M), len(weights)):
        mono, den, prev = UNIT, 1, 0
        for a, k, n in zip(colors, weights, ns):
            mono = mono * a ** (n - prev)
            den *= n**k
            prev = n
        acc = acc + LaurentPoly({mono: Fraction(1, den)})
    return acc


def word_sum(word, M):
    """The same kind of sum read off a word e_{z_1} e_0^{k_1-1} ... e_{z_{r+1}}."""
    colors, weights = [], []
    for c in word[:-1]:
        if c is ZERO:
            weights[-1] += 1
        else:
            colors.append(c)
            weights.append(1)
    last = word[-1].inverse()
    acc = LaurentPoly()
    for ns in combinations(range(1, M), len(weights)):
        mono, den, prev = UNIT, 1, 0
        for a, k, n in zip(colors, weights, ns):
            mono = mono * a.inverse() ** (n - prev)
            den *= n**k
            prev = n
        acc = acc + LaurentPoly({mono * last ** (M - prev): Fraction(1, den)})
    return acc


def tree_sum(p, M):
    """Enumerate every assignment of positive integers to nonzero vertices summing to M."""
    t = p.tree
    nz = sorted(v for v in t.vertices if t.coloring[v] is not ZERO)
    below = {v: [u for u in nz if u in t.subtree(v)] for v in t.vertices if v != t.root}
    acc = LaurentPoly()
    for ms in product(range(1, M + 1), repeat=len(nz)):
        if sum(ms) != M:
            continue
        m = dict(zip(nz, ms))
        mono = UNIT
        for v in nz:
            mono = mono * t.coloring[v].inverse() ** m[v]
        den = 1
        for v, us in below.items():
            den *= sum(m[u] for u in us) ** p.k_v(v)
        acc = acc + LaurentPoly({mono: Fraction(1, den)})
    return acc


def symmetric_sum(k, M, T):
    """Linear t-adic symmetric sum by direct enumeration, as a list of t-coefficients."""
    r = len(k)
    out = [Fraction(0)] * (T + 1)
    for i in range(r + 1):
        for pos in combinations(range(1, M), i):
            for neg in combinations(range(1, M), r - i):
                ms = sorted(neg, reverse=True)  # n_{i+1} < ... < n_r < 0
                top = pos[-1] if pos else 0
                bottom = ms[0] if ms else 0
                if top + bottom >= M:
                    continue
                coef = [Fraction(1)] + [Fraction(0)] * T
                for n, kk in zip(pos, k[:i]):
                    coef = [c / n**kk for c in coef]
                for m, kk in zip(ms, k[i:]):
                    # 1/(t - m)^kk as a power series in t
                    ser = [Fraction((-1) ** kk * _binom(kk + f - 1, f), m ** (kk + f)) for f in range(T + 1)]
                    coef = [sum(coef[a] * ser[d - a] for a in range(d + 1)) for d in range(T + 1)]
                out = [o + c for o, c in zip(out, coef)]
    return out


def _binom(n, k):
    from math import comb

    return comb(n, k)
