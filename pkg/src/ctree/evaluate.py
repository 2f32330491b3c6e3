"""Exact truncated sums, the brute-force tree oracle and the mod-p^T checks."""

from __future__ import annotations

import hashlib
import time
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb, lcm

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # plain ints are exact too, only slower
    _bigint = int

from .coeffring import (
    UNIT,
    LaurentPoly,
    ModLaurent,
    Monomial,
    TSeries,
    reduce_mod,
    specialize_cyclotomic,
)
from .errors import BadResidueClass, BadWordShape, NotAdmissible, PreconditionViolated
from .kernels import composition_sums
from .shuffle import ZERO, IndexTuple, WordSum, shuffle_tuples
from .trees import DCH, ColoredPair, admissible, change_root

# ------------------------------------------------------------------ reports


def _digest(value) -> str:
    return hashlib.sha256(str(value).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class TruncReport:
    claim: str
    params: str
    lhs: object
    rhs: object
    equal: bool
    millis: int = 0

    @property
    def verdict(self) -> str:
        return "PASS" if self.equal else "FAIL"

    def csv_row(self, timing: bool = True) -> list[str]:
        return [
            self.claim,
            self.params,
            self.verdict,
            _digest(self.lhs),
            _digest(self.rhs),
            str(self.millis if timing else 0),
        ]


CSV_HEADER = ["claim", "params", "verdict", "lhs_hash", "rhs_hash", "millis"]


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.millis = int(round((time.perf_counter() - self.t0) * 1000))


# ------------------------------------------------------------ nested sums


def zeta_trunc(k: Sequence[int], M: int) -> Fraction:
    """sum over 0<n_1<...<n_r<M of 1/(n_1^k_1 ... n_r^k_r)."""
    # prev[n] = sum over chains ending exactly at n
    prev = [Fraction(0)] * M
    if M > 0:
        prev[0] = Fraction(1)
    for kk in k:
        cur = [Fraction(0)] * M
        run = Fraction(0)
        for n in range(1, M):
            run += prev[n - 1]
            cur[n] = run / n**kk
        prev = cur
        prev[0] = Fraction(0)
    if not k:
        return Fraction(1)
    return sum(prev, Fraction(0))


def _chain_table(colors: Sequence[Monomial], weights: Sequence[int], top: int) -> list[LaurentPoly]:
    """S[n] = sum over 0<n_1<...<n_r=n of prod a_i^(n_i-n_{i-1}) / n_i^k_i, for n < top."""
    S = [LaurentPoly()] * top
    if top > 0:
        S[0] = LaurentPoly.constant(1)
    for a, kk in zip(colors, weights):
        new = [LaurentPoly()] * top
        G = LaurentPoly()
        for n in range(1, top):
            G = (G + S[n - 1]) * a
            if G:
                new[n] = G * Fraction(1, n**kk)
        S = new
    return S


def poly_trunc(t: IndexTuple | Mapping[IndexTuple, object], M: int) -> LaurentPoly:
    if isinstance(t, Mapping):
        acc = LaurentPoly()
        for tup, c in t.items():
            acc = acc + poly_trunc(tup, M) * c
        return acc
    if not t.weights:
        return LaurentPoly.constant(1)
    S = _chain_table(t.colors, t.weights, M)
    acc = LaurentPoly()
    for v in S:
        acc = acc + v
    return acc


def _word_blocks(w: tuple) -> tuple[list[Monomial], list[int], Monomial]:
    if not w or w[0] is ZERO or w[-1] is ZERO:
        raise BadWordShape("word must start and end with a nonzero letter")
    colors: list[Monomial] = []
    weights: list[int] = []
    for c in w[:-1]:
        if c is ZERO:
            weights[-1] += 1
        else:
            colors.append(c)
            weights.append(1)
    return colors, weights, w[-1]


def word_series_table(w: tuple, M_max: int) -> list[LaurentPoly]:
    """Values of the word's truncated sum for M = 0..M_max."""
    colors, weights, last = _word_blocks(w)
    S = _chain_table([c.inverse() for c in colors], weights, M_max + 1)
    b = last.inverse()
    out = [LaurentPoly()] * (M_max + 1)
    W = LaurentPoly()
    for M in range(1, M_max + 1):
        W = (W + S[M - 1]) * b
        out[M] = W
    return out


def word_series(w: tuple | WordSum, M: int) -> LaurentPoly:
    if isinstance(w, WordSum):
        acc = LaurentPoly()
        for word, c in w.items():
            acc = acc + word_series(word, M) * c
        return acc
    return word_series_table(tuple(w), M)[M]


# ------------------------------------------------------------- tree oracle


_ORACLE_CACHE: dict = {}


def _pair_key(p: ColoredPair) -> tuple:
    t = p.tree
    return (t.root, tuple(sorted((v, str(c)) for v, c in t.coloring.items())), tuple(p.edge_list()))


def uses_merged_variable_rule(p: ColoredPair) -> bool:
    """True if some nonzero non-root vertex hangs on a 0-index edge."""
    t = p.tree
    return any(v != t.root and t.coloring[v] is not ZERO and p.k_v(v) == 0 for v in t.vertices)


def tree_oracle_table(p: ColoredPair, M_max: int, backend: str | None = None) -> list[LaurentPoly]:
    """tree_oracle(p, M) for M = 0..M_max by enumerating compositions."""
    if not admissible(p, DCH):
        raise NotAdmissible("tree oracle needs a 0-admissible pair with nonzero root")
    key = (_pair_key(p), M_max, backend)
    hit = _ORACLE_CACHE.get(key)
    if hit is not None:
        return hit
    t = p.tree
    order = [v for v in t.postorder() if t.coloring[v] is not ZERO]
    pos = {v: i for i, v in enumerate(order)}
    palette = sorted({t.coloring[v] for v in order})
    cls = [palette.index(t.coloring[v]) for v in order]
    ranges = []
    for v in t.vertices:
        if v == t.root or p.k_v(v) == 0:
            continue
        inside = sorted(pos[u] for u in t.subtree(v) if u in pos)
        if not inside:
            raise NotAdmissible(f"edge above {v!r} has no nonzero vertex below it")
        ranges.append((inside[0], inside[-1] + 1, p.k_v(v)))
    ranges.sort()
    sums = composition_sums(len(order), ranges, cls, len(palette), M_max, backend)
    inv = [c.inverse() for c in palette]
    table = [LaurentPoly() for _ in range(M_max + 1)]
    buckets: list[dict] = [{} for _ in range(M_max + 1)]
    for counts, val in sums.items():
        m = UNIT
        for c, e in zip(inv, counts):
            if e:
                m = m * c**e
        b = buckets[sum(counts)]
        b[m] = b.get(m, 0) + val
    for M in range(M_max + 1):
        table[M] = LaurentPoly(buckets[M])
    if len(_ORACLE_CACHE) > 4096:
        _ORACLE_CACHE.clear()
    _ORACLE_CACHE[key] = table
    return table


def tree_oracle(p: ColoredPair, M: int) -> LaurentPoly:
    return tree_oracle_table(p, M)[M]


class ZSeries:
    """Power series in z without constant term, truncated above z^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[LaurentPoly], order: int):
        cs = [LaurentPoly()] + [c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c) for c in list(coeffs)[1 : order + 1]]
        cs += [LaurentPoly()] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.coeffs[n]

    def __add__(self, other: "ZSeries") -> "ZSeries":
        order = min(self.order, other.order)
        return ZSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], order)

    def __neg__(self) -> "ZSeries":
        return ZSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ZSeries):
            return ZSeries([a * other for a in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = [LaurentPoly() for _ in range(order + 1)]
        for i in range(1, order + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(1, order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return ZSeries(out, order)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(order + 1))

    __hash__ = None

    def __str__(self) -> str:
        return " + ".join(f"({c})*z^{i}" for i, c in enumerate(self.coeffs) if c) or "0"


def iter_series(p: ColoredPair, M_max: int) -> ZSeries:
    table = tree_oracle_table(p, M_max)
    sign = -1 if p.nonzero_count() % 2 else 1
    return ZSeries([table[M] * Fraction(sign, M) if M else LaurentPoly() for M in range(M_max + 1)], M_max)


def root_change_series(p: ColoredPair, new_root: str, M_max: int) -> tuple[ZSeries, ZSeries]:
    """Both sides of the root-change identity as truncated z-series."""
    rc = change_root(p, new_root)
    lhs = iter_series(p, M_max)
    rhs = iter_series(rc.main, M_max) * rc.sign
    for term in rc.forest:
        prod = None
        for f in term.factors:
            s = iter_series(f, M_max)
            prod = s if prod is None else prod * s
        rhs = rhs + prod * term.sign
    return lhs, rhs


# --------------------------------------------------------------- mod p^T


def fmpl_mod(t: IndexTuple | Mapping[IndexTuple, object], p: int, T: int) -> ModLaurent:
    return ModLaurent.from_laurent(poly_trunc(t, p), p, T)


def _variables(prefix: str, n: int) -> list[Monomial]:
    return [Monomial.var(f"{prefix}{i + 1}") for i in range(n)]


def _offsets(s: int, total: int):
    """All (f_1..f_s) of nonnegative integers with sum <= total."""
    for f in iproduct(range(total + 1), repeat=s):
        if sum(f) <= total:
            yield f


def p_shuffle_sides(k: Sequence[int], l: Sequence[int], p: int, T: int) -> tuple[ModLaurent, ModLaurent]:
    return _p_shuffle_sides(tuple(k), tuple(l), p, T)


@lru_cache(maxsize=256)
def _p_shuffle_sides(k: tuple, l: tuple, p: int, T: int) -> tuple[ModLaurent, ModLaurent]:
    if not l:
        raise PreconditionViolated("the y-side index must be nonempty")
    xs, ys = _variables("x", len(k)), _variables("y", len(l))
    s = len(l)
    lhs = fmpl_mod(shuffle_tuples(IndexTuple(xs, k), IndexTuple(ys, l)), p, T)
    y1inv = ys[0].inverse()
    colors = [x * y1inv for x in xs] + [y1inv] + [ys[j] * y1inv for j in range(s - 1, 0, -1)]
    mod = p**T
    rhs = ModLaurent(mod)
    for f in _offsets(s, T - 1):
        coeff = p ** sum(f)
        for li, fi in zip(l, f):
            coeff *= comb(li + fi - 1, fi)
        weights = list(k) + [l[j] + f[j] for j in range(s - 1, -1, -1)]
        rhs = rhs + fmpl_mod(IndexTuple(colors, weights), p, T) * coeff
    sign = -1 if sum(l) % 2 else 1
    rhs = rhs * (ys[0] ** p) * sign
    return lhs, rhs


def _params(**kw) -> str:
    parts = []
    for name, v in kw.items():
        if isinstance(v, (list, tuple)):
            v = ",".join(map(str, v)) or "-"
        parts.append(f"{name}={v}")
    return ";".join(parts)


def verify_p_shuffle(k: Sequence[int], l: Sequence[int], p: int, T: int) -> TruncReport:
    with _Timer() as tm:
        lhs, rhs = p_shuffle_sides(k, l, p, T)
    return TruncReport("p-shuffle", _params(k=k, l=l, p=p, T=T), lhs, rhs, lhs == rhs, tm.millis)


def verify_p_shuffle_cyclotomic(
    k: Sequence[int],
    l: Sequence[int],
    N: int,
    alpha: int,
    p: int,
    T: int,
    assignment: Mapping[str, int],
) -> TruncReport:
    if (p - alpha) % N:
        raise BadResidueClass(f"{p} is not congruent to {alpha} mod {N}")
    with _Timer() as tm:
        lhs, rhs = p_shuffle_sides(k, l, p, T)
        lhs_c = specialize_cyclotomic(lhs, N, assignment)
        rhs_c = specialize_cyclotomic(rhs, N, assignment)
    assign = ",".join(f"{v}={a}" for v, a in sorted(assignment.items()))
    params = _params(k=k, l=l, p=p, T=T, N=N, alpha=alpha, assign=assign)
    return TruncReport("p-shuffle-cyclo", params, lhs_c, rhs_c, lhs_c == rhs_c, tm.millis)


def root_change_mod_p(pair: ColoredPair, new_root: str, p: int) -> TruncReport:
    if any(c is not ZERO and c != UNIT for c in pair.tree.coloring.values()):
        raise PreconditionViolated("colors must lie in {0, 1}")
    moved = pair.rerooted(new_root)
    if not admissible(pair) or not admissible(moved):
        raise NotAdmissible("both rootings must be admissible")
    with _Timer() as tm:
        path = pair.tree.path(pair.root, new_root)
        total = sum(pair.k(a, b) for a, b in zip(path, path[1:]))
        lhs = reduce_mod(tree_oracle(pair, p).constant_term(), p, 1)
        rhs = reduce_mod(tree_oracle(moved, p).constant_term() * (-1) ** total, p, 1)
    return TruncReport("root-change", _params(new_root=new_root, p=p), lhs, rhs, lhs == rhs, tm.millis)


# ------------------------------------------------------- t-adic, linear case


def _positive_chain(weights: Sequence[int], M: int, L: int) -> list[int]:
    """P[a] = sum over 0<n_1<...<n_j=a of prod (L/n_i)^k_i; P[0] = 1 for the empty chain."""
    P = [0] * M
    P[0] = 1
    for kk in weights:
        new = [0] * M
        run = 0
        for a in range(1, M):
            run += P[a - 1]
            if run:
                new[a] = run * (L // a) ** kk
        P = new
    return P


def _negative_chain(weights: Sequence[int], M: int, L: int, T: int) -> list[list[int]]:
    """Q[b][f]: chains b = m_1 > ... > m_j > 0 of 1/(t - m)^k, scaled by L^(weight + f)."""
    Q = [[0] * (T + 1) for _ in range(M)]
    Q[0][0] = 1
    for kk in reversed(weights):
        new = [[0] * (T + 1) for _ in range(M)]
        run = [0] * (T + 1)
        sign = -1 if kk % 2 else 1
        binoms = [comb(kk + g - 1, g) for g in range(T + 1)]
        for b in range(1, M):
            prev = Q[b - 1]
            for f in range(T + 1):
                run[f] += prev[f]
            if not any(run):
                continue
            q = L // b
            power = q**kk
            factor = []
            for g in range(T + 1):
                factor.append(sign * binoms[g] * power)
                power *= q
            row = new[b]
            for f in range(T + 1):
                if run[f]:
                    for g in range(T + 1 - f):
                        row[f + g] += run[f] * factor[g]
        Q = new
    return Q


def smzv_trunc_linear(k: Sequence[int], M: int, T: int) -> TSeries:
    """Truncated t-adic symmetric sum of a linear index, exact to t^T."""
    r = len(k)
    L = _bigint(lcm(*range(1, M)) if M > 1 else 1)
    W = sum(k)
    totals = [0] * (T + 1)
    for i in range(r + 1):
        P = _positive_chain(k[:i], M, L)
        Q = _negative_chain(k[i:], M, L, T)
        cum = [0] * M
        run = 0
        for a in range(M):
            run += P[a]
            cum[a] = run
        for b in range(M):
            row = Q[b]
            if not any(row):
                continue
            c = cum[M - 1 - b]
            if c:
                for f in range(T + 1):
                    totals[f] += row[f] * c
    return TSeries([Fraction(int(totals[f]), int(L ** (W + f))) for f in range(T + 1)], T)
