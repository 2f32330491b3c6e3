"""Words over the color alphabet and the shuffle product."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Union

from .coeffring import UNIT, LaurentPoly, Monomial, parse_monomial
from .errors import NotH1Shape, ParseError, WrongFinalLetter


class _ZeroColor:
    __slots__ = ()

    def __repr__(self) -> str:
        return "ZERO"

    def __str__(self) -> str:
        return "0"

    def __reduce__(self):
        return "ZERO"


ZERO = _ZeroColor()
Color = Union[_ZeroColor, Monomial]
Word = tuple  # tuple of Colors; () is the empty word


def is_zero(c: Color) -> bool:
    return c is ZERO


def color_key(c: Color) -> tuple:
    return (0, ()) if c is ZERO else (1, tuple(c))


def word_key(w: Word) -> tuple:
    return (len(w), tuple(color_key(c) for c in w))


def parse_color(text: str) -> Color:
    text = text.strip()
    if text == "0":
        return ZERO
    return parse_monomial(text)


def format_color(c: Color) -> str:
    return str(c)


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(f"e[{c}]" for c in w)


_LETTER_RE = re.compile(r"e\[([^\]]*)\]\Z")


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return ()
    letters = []
    for tok in text.split():
        m = _LETTER_RE.match(tok)
        if not m:
            raise ParseError(f"bad letter {tok!r}")
        letters.append(parse_color(m.group(1)))
    return tuple(letters)


def reverse(w: Word) -> Word:
    return tuple(reversed(w))


@lru_cache(maxsize=1 << 17)
def _shuffle_words(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict[Word, int] = {}
    last = v[-1:]
    for w, c in _shuffle_words(u, v[:-1]):
        w = w + last
        out[w] = out.get(w, 0) + c
    last = u[-1:]
    for w, c in _shuffle_words(u[:-1], v):
        w = w + last
        out[w] = out.get(w, 0) + c
    return tuple(out.items())


def _is_zero_coeff(c: Any) -> bool:
    return not c


def _fmt_coeff(c: Any) -> tuple[str, str]:
    """Split a coefficient into (sign, magnitude text)."""
    if isinstance(c, LaurentPoly):
        if len(c) == 1:
            (m, a), = c.items()
            if m.is_unit():
                return _fmt_coeff(a)
            sign, mag = _fmt_coeff(a)
            return sign, str(m) if mag == "1" else f"{mag}*{m}"
        return "+", f"({c})"
    if hasattr(c, "numerator"):
        from fractions import Fraction

        c = Fraction(c)
        return ("-" if c < 0 else "+"), str(abs(c))
    return "+", f"({c})"


class WordSum:
    """Finite linear combination of words.

    Coefficients live in any commutative ring whose zero tests falsy
    (ints, Fractions, LaurentPoly).  Multiplying two WordSums shuffles.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Any] | Iterable[tuple[Word, Any]] | None = None):
        acc: dict[Word, Any] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                w = tuple(w)
                acc[w] = acc[w] + c if w in acc else c
        self._terms = {w: c for w, c in acc.items() if not _is_zero_coeff(c)}

    @classmethod
    def _wrap(cls, terms: dict) -> "WordSum":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def word(cls, w: Word, c: Any = 1) -> "WordSum":
        return cls._wrap({tuple(w): c} if c else {})

    @classmethod
    def one(cls) -> "WordSum":
        return cls._wrap({(): 1})

    def items(self) -> list[tuple[Word, Any]]:
        return sorted(self._terms.items(), key=lambda wc: word_key(wc[0]))

    def words(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def coefficient(self, w: Word) -> Any:
        return self._terms.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, WordSum):
            return NotImplemented
        d = dict(self._terms)
        for w, c in other._terms.items():
            if w in d:
                s = d[w] + c
                if _is_zero_coeff(s):
                    del d[w]
                else:
                    d[w] = s
            else:
                d[w] = c
        return WordSum._wrap(d)

    __radd__ = __add__

    def __neg__(self) -> "WordSum":
        return WordSum._wrap({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return self + (-other)

    def scale(self, k: Any) -> "WordSum":
        if _is_zero_coeff(k):
            return WordSum()
        return WordSum({w: c * k for w, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WordSum):
            return self.scale(other)
        out: dict[Word, Any] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                ab = a * b
                for w, n in _shuffle_words(u, v):
                    term = ab * n
                    out[w] = out[w] + term if w in out else term
        return WordSum(out)

    def __rmul__(self, other):
        return WordSum({w: other * c for w, c in self._terms.items()})

    def concat(self, other: "WordSum") -> "WordSum":
        out: dict[Word, Any] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u + v
                out[w] = out[w] + a * b if w in out else a * b
        return WordSum(out)

    def append(self, w: Word) -> "WordSum":
        w = tuple(w)
        return WordSum._wrap({u + w: c for u, c in self._terms.items()})

    def prepend(self, w: Word) -> "WordSum":
        w = tuple(w)
        return WordSum._wrap({w + u: c for u, c in self._terms.items()})

    def map_words(self, f: Callable[[Word], Word]) -> "WordSum":
        return WordSum((f(w), c) for w, c in self._terms.items())

    def map_coeffs(self, f: Callable[[Any], Any]) -> "WordSum":
        return WordSum((w, f(c)) for w, c in self._terms.items())

    def coefficient_mass(self) -> Any:
        return sum(self._terms.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, WordSum):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(c == other._terms[w] for w, c in self._terms.items())

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for i, (w, c) in enumerate(self.items()):
            sign, mag = _fmt_coeff(c)
            body = f"{mag} * {format_word(w)}"
            if i == 0:
                out = ("-" if sign == "-" else "") + body
            else:
                out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"WordSum({str(self)!r})"


def shuffle(w: Word, v: Word) -> WordSum:
    return WordSum._wrap(dict(_shuffle_words(tuple(w), tuple(v))))


def strip_last(s: WordSum) -> WordSum:
    return WordSum((w[:-1], c) for w, c in s.items() if w)


def r_inverse(s: WordSum, z: Color) -> WordSum:
    out = []
    for w, c in s.items():
        if not w:
            continue
        if w[-1] != z:
            raise WrongFinalLetter(f"{format_word(w)} does not end in e[{z}]")
        out.append((w[:-1], c))
    return WordSum(out)


@dataclass(frozen=True)
class IndexTuple:
    colors: tuple
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "weights", tuple(int(k) for k in self.weights))
        if len(self.colors) != len(self.weights):
            raise ValueError("colors and weights differ in length")
        if any(k < 1 for k in self.weights):
            raise ValueError("weights must be positive")
        if any(c is ZERO or not isinstance(c, Monomial) for c in self.colors):
            raise ValueError("tuple colors must be monomials")

    @property
    def depth(self) -> int:
        return len(self.weights)

    @property
    def weight(self) -> int:
        return sum(self.weights)

    def __str__(self) -> str:
        return f"<{','.join(map(str, self.colors))};{','.join(map(str, self.weights))}>"


def tuple_to_word(t: IndexTuple) -> Word:
    out: list = []
    for a, k in zip(t.colors, t.weights):
        out.append(a)
        out.extend([ZERO] * (k - 1))
    return tuple(out)


def word_to_tuple(w: Word) -> IndexTuple:
    if not w:
        return IndexTuple((), ())
    if w[0] is ZERO:
        raise NotH1Shape(f"{format_word(w)} is not of h^1 shape")
    colors, weights = [], []
    for c in w:
        if c is ZERO:
            weights[-1] += 1
        else:
            colors.append(c)
            weights.append(1)
    return IndexTuple(tuple(colors), tuple(weights))


def shuffle_tuples(t1: IndexTuple, t2: IndexTuple) -> dict[IndexTuple, int]:
    s = shuffle(tuple_to_word(t1), tuple_to_word(t2))
    return {word_to_tuple(w): c for w, c in s.items()}


ONE_COLOR = UNIT


def _reg_trailing_ones(w: Word) -> dict[Word, int]:
    n = 0
    while n < len(w) and w[-1 - n] == ONE_COLOR:
        n += 1
    if n == 0:
        return {w: 1}
    if n == len(w):
        return {}
    cut = len(w) - n - 1
    head, a = w[:cut], w[cut : cut + 1]
    sign = -1 if n % 2 else 1
    return {u + a: sign * c for u, c in _shuffle_words(head, (ONE_COLOR,) * n)}


def _reg_leading_zeros(w: Word) -> dict[Word, int]:
    n = 0
    while n < len(w) and w[n] is ZERO:
        n += 1
    if n == 0:
        return {w: 1}
    if n == len(w):
        return {}
    a, tail = w[n : n + 1], w[n + 1 :]
    sign = -1 if n % 2 else 1
    return {a + u: sign * c for u, c in _shuffle_words((ZERO,) * n, tail)}


def regularize(s: WordSum) -> WordSum:
    """Project onto words that neither start with e_0 nor end with e_1.

    This is the shuffle homomorphism sending the letters e_0 and e_1
    (as standalone words) to zero, which is what tangential base points
    at 0 and 1 do to iterated integrals.
    """
    out: dict[Word, Any] = {}
    for w, c in s._terms.items():
        for w1, c1 in _reg_trailing_ones(w).items():
            for w2, c2 in _reg_leading_zeros(w1).items():
                term = c * (c1 * c2)
                out[w2] = out[w2] + term if w2 in out else term
    return WordSum(out)
