"""Exact coefficient arithmetic.

Rationals are :class:`fractions.Fraction` (or plain ``int`` where no
division happened).  Everything here is immutable once built.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Any, Callable, Union

from .errors import DenominatorNotInvertible, ParseError, UnassignedVariable

Scalar = Union[int, Fraction]

_EXP_LIMIT = 1 << 63
_VAR_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")
_FACTOR_RE = re.compile(r"([a-z][a-z0-9_]*)(?:\^([+-]?\d+))?\Z")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ParseError(f"not a rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def _check_exponent(e: int) -> None:
    if not -_EXP_LIMIT <= e < _EXP_LIMIT:
        raise OverflowError(f"monomial exponent {e} out of range")


class Monomial(tuple):
    """A Laurent monomial, stored as sorted ``(variable, exponent)`` pairs.

    The empty monomial is the unit ``1``.  Ordering of the stored pairs is
    also the canonical ordering used for printing polynomials.
    """

    __slots__ = ()

    def __new__(cls, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[str, int] = {}
        for var, e in items:
            acc[var] = acc.get(var, 0) + int(e)
        return cls._make(sorted((v, e) for v, e in acc.items() if e))

    @classmethod
    def _make(cls, pairs) -> "Monomial":
        for _, e in pairs:
            _check_exponent(e)
        return tuple.__new__(cls, pairs)

    @classmethod
    def var(cls, name: str, exponent: int = 1) -> "Monomial":
        return cls(((name, exponent),))

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        d = dict(self)
        for v, e in other:
            s = d.get(v, 0) + e
            if s:
                d[v] = s
            else:
                del d[v]
        return Monomial._make(sorted(d.items()))

    __rmul__ = None  # tuple repetition must never kick in

    def inverse(self) -> "Monomial":
        return Monomial._make(tuple((v, -e) for v, e in self))

    def __truediv__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "Monomial":
        if n == 0:
            return UNIT
        return Monomial._make(tuple((v, e * n) for v, e in self))

    def exponent(self, var: str) -> int:
        for v, e in self:
            if v == var:
                return e
        return 0

    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self)

    def is_unit(self) -> bool:
        return not self

    def __str__(self) -> str:
        if not self:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


UNIT = Monomial()


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return UNIT
    if not text:
        raise ParseError("empty monomial")
    pairs = []
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if not m:
            raise ParseError(f"bad monomial factor {factor!r} in {text!r}")
        pairs.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
    return Monomial(pairs)


def _is_scalar(x: Any) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _fmt_scalar(c: Scalar) -> str:
    return str(Fraction(c))


class LaurentPoly:
    """Finite sum of monomials with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] | None = None):
        acc: dict[Monomial, Scalar] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for m, c in items:
                if not isinstance(m, Monomial):
                    m = Monomial(m)
                acc[m] = acc.get(m, 0) + c
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls._wrap({UNIT: c} if c else {})

    @classmethod
    def monomial(cls, m: Monomial, c: Scalar = 1) -> "LaurentPoly":
        return cls._wrap({m: c} if c else {})

    @classmethod
    def var(cls, name: str, exponent: int = 1) -> "LaurentPoly":
        return cls.monomial(Monomial.var(name, exponent))

    def items(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self._terms.items())

    def coefficient(self, m: Monomial) -> Scalar:
        return self._terms.get(m, 0)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms)

    def variables(self) -> set[str]:
        return {v for m in self._terms for v in m.variables()}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and UNIT in self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get(UNIT, 0)

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if _is_scalar(other):
            return LaurentPoly.constant(other)
        if isinstance(other, Monomial):
            return LaurentPoly.monomial(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self._terms)
        for m, c in o._terms.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return LaurentPoly._wrap(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return LaurentPoly()
            return LaurentPoly._wrap({m: c * other for m, c in self._terms.items()})
        if isinstance(other, Monomial):
            return LaurentPoly._wrap({m * other: c for m, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d: dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                d[m] = d.get(m, 0) + c1 * c2
        return LaurentPoly._wrap({m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return LaurentPoly._wrap({m: Fraction(c) / other for m, c in self._terms.items()})
        if isinstance(other, Monomial):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            (m, c), = self._terms.items()
            return LaurentPoly.monomial(m ** n, Fraction(1) / Fraction(c) ** -n)
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def map_monomials(self, f: Callable[[Monomial], Monomial]) -> "LaurentPoly":
        return LaurentPoly((f(m), c) for m, c in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if m.is_unit():
                body = _fmt_scalar(a)
            elif a == 1:
                body = str(m)
            else:
                body = f"{_fmt_scalar(a)}*{m}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def reduce_mod(q: Scalar, p: int, T: int) -> int:
    q = Fraction(q)
    mod = p**T
    if q.denominator % p == 0:
        raise DenominatorNotInvertible(f"{q} is not {p}-integral")
    return q.numerator * pow(q.denominator, -1, mod) % mod


class ModLaurent:
    """Laurent polynomial with coefficients in Z/mZ, m = p^T."""

    __slots__ = ("modulus", "_terms")

    def __init__(self, modulus: int, terms: Mapping[Monomial, int] | None = None):
        self.modulus = modulus
        acc: dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            acc[m] = (acc.get(m, 0) + c) % modulus
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def from_laurent(cls, f: LaurentPoly, p: int, T: int) -> "ModLaurent":
        return cls(p**T, {m: reduce_mod(c, p, T) for m, c in f.items()})

    @classmethod
    def constant(cls, modulus: int, c: int) -> "ModLaurent":
        return cls(modulus, {UNIT: c})

    def items(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items())

    def variables(self) -> set[str]:
        return {v for m in self._terms for v in m.variables()}

    def _check(self, other: "ModLaurent") -> None:
        if other.modulus != self.modulus:
            raise ValueError("modulus mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = ModLaurent.constant(self.modulus, other)
        if not isinstance(other, ModLaurent):
            return NotImplemented
        self._check(other)
        d = dict(self._terms)
        for m, c in other._terms.items():
            d[m] = d.get(m, 0) + c
        return ModLaurent(self.modulus, d)

    __radd__ = __add__

    def __neg__(self) -> "ModLaurent":
        return ModLaurent(self.modulus, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ModLaurent(self.modulus, {m: c * other for m, c in self._terms.items()})
        if isinstance(other, Monomial):
            return ModLaurent(self.modulus, {m * other: c for m, c in self._terms.items()})
        if not isinstance(other, ModLaurent):
            return NotImplemented
        self._check(other)
        d: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                d[m] = d.get(m, 0) + c1 * c2
        return ModLaurent(self.modulus, d)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ModLaurent.constant(self.modulus, other)
        if not isinstance(other, ModLaurent):
            return NotImplemented
        return self.modulus == other.modulus and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.modulus, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}" if m.is_unit() else f"{c}*{m}" for m, c in self.items())

    def __repr__(self) -> str:
        return f"ModLaurent({self.modulus}, {str(self)!r})"


class CycloElem:
    """Element of R[X]/(X^N - 1); R is Q (modulus None) or Z/mZ."""

    __slots__ = ("level", "coords", "modulus")

    def __init__(self, level: int, coords: Iterable, modulus: int | None = None):
        coords = list(coords)
        if len(coords) != level:
            raise ValueError("coordinate vector must have length N")
        if modulus is not None:
            coords = [c % modulus for c in coords]
        self.level = level
        self.coords = tuple(coords)
        self.modulus = modulus

    def _like(self, coords) -> "CycloElem":
        return CycloElem(self.level, coords, self.modulus)

    def __add__(self, other):
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self._like(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self._like(a - b for a, b in zip(self.coords, other.coords))

    def __mul__(self, other):
        if _is_scalar(other):
            return self._like(c * other for c in self.coords)
        if not isinstance(other, CycloElem):
            return NotImplemented
        n = self.level
        out = [0] * n
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        out[(i + j) % n] += a * b
        return self._like(out)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElem):
            return NotImplemented
        return (self.level, self.modulus, self.coords) == (other.level, other.modulus, other.coords)

    def __hash__(self) -> int:
        return hash((self.level, self.modulus, self.coords))

    def __str__(self) -> str:
        terms = [f"{c}*X^{i}" if i else f"{c}" for i, c in enumerate(self.coords) if c]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"CycloElem(N={self.level}, {str(self)!r})"


def specialize_cyclotomic(
    f: LaurentPoly | ModLaurent, level: int, assignment: Mapping[str, int]
) -> CycloElem:
    modulus = f.modulus if isinstance(f, ModLaurent) else None
    out: list[Scalar] = [0] * level
    for m, c in f.items():
        e = 0
        for v, k in m:
            if v not in assignment:
                raise UnassignedVariable(f"no root-of-unity exponent for {v!r}")
            e += assignment[v] * k
        out[e % level] += c
    return CycloElem(level, out, modulus)


def _add_payload(a, b):
    if isinstance(a, int) and a == 0:
        return b
    if isinstance(b, int) and b == 0:
        return a
    return a + b


class TSeries:
    """Power series in t truncated above degree ``order``.

    Coefficients are any ring-like payload; the integer 0 is used as the
    zero of every payload ring.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls((), order)

    def __getitem__(self, n: int):
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def __add__(self, other):
        if not isinstance(other, TSeries):
            if isinstance(other, int) and other == 0:
                return self
            return NotImplemented
        order = min(self.order, other.order)
        return TSeries((_add_payload(a, b) for a, b in zip(self.coeffs, other.coeffs)), order)

    __radd__ = __add__

    def __neg__(self) -> "TSeries":
        return TSeries((-c if not (isinstance(c, int) and c == 0) else 0 for c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TSeries):
            return TSeries((c * other for c in self.coeffs), self.order)
        order = min(self.order, other.order)
        out: list = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: order + 1 - i]):
                if b:
                    out[i + j] = _add_payload(out[i + j], a * b)
        return TSeries(out, order)

    def __rmul__(self, other):
        return TSeries((other * c for c in self.coeffs), self.order)

    def shift(self, n: int) -> "TSeries":
        """Multiply by t^n."""
        return TSeries([0] * n + list(self.coeffs), self.order)

    def map(self, f: Callable) -> "TSeries":
        return TSeries((f(c) for c in self.coeffs), self.order)

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self
        if not isinstance(other, TSeries):
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, other.coeffs)) and self.order == other.order

    __hash__ = None

    def __repr__(self) -> str:
        return f"TSeries({list(self.coeffs)!r}, order={self.order})"


class PiGraded:
    """Finite sum of payloads times powers of a formal 2*pi*i."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Mapping[int, Any] | None = None):
        self._parts = {d: c for d, c in (parts or {}).items() if c}
        if any(d < 0 for d in self._parts):
            raise ValueError("negative pi-degree")

    def component(self, d: int):
        return self._parts.get(d, 0)

    def degrees(self) -> list[int]:
        return sorted(self._parts)

    def items(self) -> list[tuple[int, Any]]:
        return sorted(self._parts.items())

    def __add__(self, other):
        if not isinstance(other, PiGraded):
            if isinstance(other, int) and other == 0:
                return self
            return NotImplemented
        d = dict(self._parts)
        for k, c in other._parts.items():
            d[k] = _add_payload(d.get(k, 0), c)
        return PiGraded(d)

    __radd__ = __add__

    def __neg__(self) -> "PiGraded":
        return PiGraded({d: -c for d, c in self._parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PiGraded):
            return PiGraded({d: c * other for d, c in self._parts.items()})
        out: dict[int, Any] = {}
        for d1, c1 in self._parts.items():
            for d2, c2 in other._parts.items():
                out[d1 + d2] = _add_payload(out.get(d1 + d2, 0), c1 * c2)
        return PiGraded(out)

    def __rmul__(self, other):
        return PiGraded({d: other * c for d, c in self._parts.items()})

    def shift(self, n: int) -> "PiGraded":
        """Multiply by (2*pi*i)^n; n may be negative if no degree drops below 0."""
        return PiGraded({d + n: c for d, c in self._parts.items()})

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._parts
        if not isinstance(other, PiGraded):
            return NotImplemented
        keys = set(self._parts) | set(other._parts)
        return all(self.component(k) == other.component(k) for k in keys)

    __hash__ = None

    def __repr__(self) -> str:
        return f"PiGraded({self._parts!r})"
