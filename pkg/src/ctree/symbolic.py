"""Formal t-adic and refined symmetric polylogarithms as word symbols.

A word ``w`` stands for the regularized iterated integral along the
straight path from 0 to 1.  Products of such integrals are shuffles of
their words.  Powers of 2*pi*i are tracked by :class:`PiGraded`.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import comb, factorial

from .coeffring import UNIT, LaurentPoly, Monomial, PiGraded, TSeries
from .errors import NonvanishingPiZero, NotLinear, PreconditionViolated
from .evaluate import TruncReport, _params, _Timer
from .shuffle import ZERO, IndexTuple, Word, WordSum, regularize, reverse, shuffle, shuffle_tuples, tuple_to_word
from .trees import FRESH, BoundaryColors, ColoredPair, harvest, is_linear, tree_word

# the path around 1 starts and ends at the tangential point over 0, which
# is not a vertex color, so 0-colored roots and leaves are legal here
LOOP = BoundaryColors(start=FRESH, end=FRESH)


@dataclass(frozen=True)
class AlphaParam:
    level: int
    rep: int

    def __post_init__(self):
        if self.level < 1 or not 0 <= self.rep < self.level:
            raise PreconditionViolated(f"need 0 <= rep < level, got {self.rep} at level {self.level}")

    @classmethod
    def of(cls, alpha: int, level: int) -> "AlphaParam":
        return cls(level, alpha % level)


def _as_poly(c) -> LaurentPoly:
    return c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c)


def li_symbol(t: IndexTuple) -> WordSum:
    letters = tuple_to_word(IndexTuple(tuple(a.inverse() for a in t.colors), t.weights))
    return WordSum.word(letters, -1 if t.depth % 2 else 1)


def beta_eval(w: Word) -> PiGraded:
    """Integral of ``w`` along the loop: out along [0,1], once around 1, back."""
    w = tuple(w)
    l = len(w)
    parts: dict[int, WordSum] = {}
    for s in range(l + 1):
        tail = reverse(w[s:])
        sign = -1 if (l - s) % 2 else 1
        # the middle stretch w[j:s] must be all unit letters
        for j in range(s, -1, -1):
            if j < s and w[j] != UNIT:
                break
            d = s - j
            term = shuffle(w[:j], tail).scale(Fraction(sign, factorial(d)))
            parts[d] = parts[d] + term if d in parts else term
    return PiGraded(parts)


def _word_times(ws: WordSum, c) -> WordSum:
    return ws.map_coeffs(lambda x: _as_poly(x) * c)


SymbolExpr = PiGraded


def rs_polylog(p: ColoredPair, alpha: AlphaParam, T: int) -> SymbolExpr:
    """Refined symmetric t-adic polylogarithm of a colored pair, as word symbols."""
    t = p.tree
    nonzero = [v for v in t.vertices if t.coloring[v] is not ZERO]
    if not nonzero:
        raise PreconditionViolated("need at least one nonzero color")
    us = sorted({t.coloring[v].inverse() for v in nonzero})
    w = "#w"
    while w in t.vertices:
        w += "'"
    sign = -1 if (len(nonzero) - 1) % 2 else 1
    series: dict[int, list] = {}
    for n in range(T + 1):
        for u in us:
            colors = {v: (c if c is ZERO else c * u) for v, c in t.coloring.items()}
            colors[w] = ZERO
            edges = p.edge_list() + [(t.root, w, n)]
            moved = harvest(ColoredPair.build(colors, edges, w), LOOP)
            weight = LaurentPoly.monomial(u**alpha.rep)
            for word, c in tree_word(moved, LOOP).items():
                for d, ws in beta_eval(word).items():
                    row = series.setdefault(d, [0] * (T + 1))
                    term = _word_times(ws, _as_poly(c) * weight * sign)
                    row[n] = term if isinstance(row[n], int) else row[n] + term
    parts = {d: TSeries(row, T) for d, row in series.items()}
    out = PiGraded(parts)
    if out.component(0):
        raise NonvanishingPiZero("degree-0 part of the loop integral did not cancel")
    return out.shift(-1)


def _tail_colors(x: list, i: int, r: int) -> tuple:
    if i == r:
        return ()
    inv = x[i].inverse()
    return tuple([inv] + [x[j] * inv for j in range(r - 1, i, -1)])


def _s_single(t: IndexTuple, alpha: AlphaParam, T: int) -> TSeries:
    r = t.depth
    x = list(t.colors) + [UNIT]
    k = t.weights
    acc = TSeries.zero(T)
    for i in range(r + 1):
        xi = x[i]
        inv = xi.inverse()
        head = li_symbol(IndexTuple(tuple(c * inv for c in x[:i]), k[:i]))
        sign = -1 if sum(k[i:]) % 2 else 1
        coeff = LaurentPoly.monomial(xi**alpha.rep) * sign
        tail_colors = _tail_colors(x, i, r)
        rows: list = [0] * (T + 1)
        for f in iproduct(range(T + 1), repeat=r - i):
            deg = sum(f)
            if deg > T:
                continue
            b = 1
            for kj, fj in zip(k[i:], f):
                b *= comb(kj + fj - 1, fj)
            weights = tuple(k[j] + f[j - i] for j in range(r - 1, i - 1, -1))
            term = _word_times(head * li_symbol(IndexTuple(tail_colors, weights)), coeff * b)
            rows[deg] = term if isinstance(rows[deg], int) else rows[deg] + term
        acc = acc + TSeries(rows, T)
    return acc


def s_polylog(t: IndexTuple | Mapping[IndexTuple, object], alpha: AlphaParam, T: int) -> SymbolExpr:
    """Symmetric t-adic polylogarithm of an index tuple (or a combination of them)."""
    if isinstance(t, Mapping):
        acc = TSeries.zero(T)
        for tup, c in t.items():
            acc = acc + _s_single(tup, alpha, T).map(lambda ws, c=c: ws if isinstance(ws, int) else _word_times(ws, c))
        return PiGraded({0: acc})
    return PiGraded({0: _s_single(t, alpha, T)})


def symmetric_l_symbol(t: IndexTuple, alpha: AlphaParam) -> WordSum:
    """The t-free symmetric combination: sum_i sign * x_{i+1}^a * Li(head) * Li(reversed tail)."""
    r = t.depth
    x = list(t.colors) + [UNIT]
    k = t.weights
    acc = WordSum()
    for i in range(r + 1):
        inv = x[i].inverse()
        head = li_symbol(IndexTuple(tuple(c * inv for c in x[:i]), k[:i]))
        tail = li_symbol(IndexTuple(_tail_colors(x, i, r), tuple(reversed(k[i:]))))
        sign = -1 if sum(k[i:]) % 2 else 1
        acc = acc + _word_times(head * tail, LaurentPoly.monomial(x[i] ** alpha.rep) * sign)
    return acc


def specialize_letters(ws: WordSum, level: int, assignment: Mapping[str, int]) -> WordSum:
    """Send every variable to a power of one primitive N-th root ``w``."""
    from .coeffring import specialize_cyclotomic

    root = Monomial.var("w")

    def letter(c):
        if c is ZERO:
            return c
        e = sum(assignment[v] * k for v, k in c) % level
        return root**e if e else UNIT

    out: dict = {}
    for word, c in ws.items():
        key = tuple(letter(a) for a in word)
        val = specialize_cyclotomic(_as_poly(c), level, assignment)
        out[key] = out[key] + val if key in out else val
    # merged letters can cancel
    return WordSum({k: v for k, v in out.items() if v})


def _symbol_regularized(e: SymbolExpr, d: int = 0) -> TSeries:
    s = e.component(d)
    if isinstance(s, int):
        return s
    return s.map(lambda ws: ws if isinstance(ws, int) else regularize(ws))


def t_shuffle_sides(k: Sequence[int], l: Sequence[int], alpha: AlphaParam, T: int) -> tuple[TSeries, TSeries]:
    if not l:
        raise PreconditionViolated("the y-side index must be nonempty")
    xs = [Monomial.var(f"x{i + 1}") for i in range(len(k))]
    ys = [Monomial.var(f"y{i + 1}") for i in range(len(l))]
    s = len(l)
    lhs = s_polylog(shuffle_tuples(IndexTuple(xs, k), IndexTuple(ys, l)), alpha, T).component(0)
    y1inv = ys[0].inverse()
    colors = tuple([x * y1inv for x in xs] + [y1inv] + [ys[j] * y1inv for j in range(s - 1, 0, -1)])
    rhs = TSeries.zero(T)
    for f in iproduct(range(T + 1), repeat=s):
        deg = sum(f)
        if deg > T:
            continue
        b = 1
        for li, fi in zip(l, f):
            b *= comb(li + fi - 1, fi)
        weights = tuple(k) + tuple(l[j] + f[j] for j in range(s - 1, -1, -1))
        rhs = rhs + s_polylog(IndexTuple(colors, weights), alpha, T).component(0).shift(deg) * b
    sign = -1 if sum(l) % 2 else 1
    factor = LaurentPoly.monomial(ys[0] ** alpha.rep) * sign
    rhs = rhs.map(lambda ws: ws if isinstance(ws, int) else _word_times(ws, factor))
    return lhs, rhs


def verify_t_shuffle(k: Sequence[int], l: Sequence[int], alpha: AlphaParam, T: int) -> TruncReport:
    with _Timer() as tm:
        lhs, rhs = t_shuffle_sides(k, l, alpha, T)
    params = _params(k=k, l=l, N=alpha.level, alpha=alpha.rep, T=T)
    return TruncReport("t-shuffle", params, _render(lhs), _render(rhs), lhs == rhs, tm.millis)


def linear_tuple(p: ColoredPair) -> IndexTuple:
    """Read a linear pair with nonzero colors as the tuple <C(rt)/C(v_1), ...; k>."""
    t = p.tree
    if not is_linear(p) or any(c is ZERO for c in t.coloring.values()):
        raise NotLinear("need a path rooted at an end with nonzero colors")
    far = max(t.vertices, key=lambda v: (len(t.path(v, t.root)), v))
    chain = t.path(far, t.root)[:-1]
    crt = t.coloring[t.root]
    return IndexTuple(tuple(crt * t.coloring[v].inverse() for v in chain), tuple(p.k_v(v) for v in chain))


def _regularized(s) -> TSeries | int:
    if isinstance(s, int):
        return s
    return s.map(lambda ws: ws if isinstance(ws, int) else regularize(ws))


def rs_s_sides(p: ColoredPair, alpha: AlphaParam, T: int) -> tuple:
    tup = linear_tuple(p)
    lhs = rs_polylog(p, alpha, T).component(0)
    factor = LaurentPoly.monomial(p.color(p.root).inverse() ** alpha.rep)
    rhs = s_polylog(tup, alpha, T).component(0)
    if not isinstance(rhs, int):
        rhs = rhs.map(lambda ws: ws if isinstance(ws, int) else _word_times(ws, factor))
    return _regularized(lhs), _regularized(rhs)


def verify_rs_s_congruence(p: ColoredPair, alpha: AlphaParam, T: int) -> TruncReport:
    """Degree-0 part of the refined symbol against the symmetric one, after regularization."""
    with _Timer() as tm:
        lhs, rhs = rs_s_sides(p, alpha, T)
    params = _params(pair=_pair_label(p), N=alpha.level, alpha=alpha.rep, T=T)
    return TruncReport("rs-s", params, _render(lhs), _render(rhs), _same(lhs, rhs), tm.millis)


def _same(a, b) -> bool:
    if isinstance(a, int) or isinstance(b, int):
        return not a and not b
    return a == b


def _pair_label(p: ColoredPair) -> str:
    return "|".join(f"{a}-{b}:{k}" for a, b, k in p.edge_list()) + f"@{p.root}"


def format_symbol(e) -> str:
    """Blocks "Pi^d * t^n * (c * word + ...)" in canonical order."""
    if isinstance(e, TSeries):
        e = PiGraded({0: e})
    blocks = []
    for d, series in e.items():
        for n, ws in enumerate(series.coeffs):
            if ws:
                blocks.append(f"Pi^{d} * t^{n} * ({ws})")
    return " + ".join(blocks) or "0"


def _render(s) -> str:
    return format_symbol(s) if not isinstance(s, int) else "0"
