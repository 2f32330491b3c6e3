"""Backend selection for the composition-enumeration kernel.

The compiled extension is used when it imports; set ``CTREE_PURE_PYTHON=1``
to force the fallback.  Both backends return identical exact values.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import comb

from . import _pykernels
from ._pykernels import _scale

try:
    from ._ckernels import composition_residues as _composition_residues
except ImportError:  # extension not built
    _composition_residues = None

BACKEND = "cython" if _composition_residues is not None and not os.environ.get("CTREE_PURE_PYTHON") else "python"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []


def _primes(count: int) -> list[int]:
    q = _PRIMES[-1] - 2 if _PRIMES else (1 << 62) - 1
    while len(_PRIMES) < count:
        if _is_prime(q):
            _PRIMES.append(q)
        q -= 2
    return _PRIMES[:count]


def _crt(residues: list[int], primes: list[int]) -> int:
    x, modulus = 0, 1
    for r, q in zip(residues, primes):
        t = (r - x) * pow(modulus, -1, q) % q
        x += modulus * t
        modulus *= q
    return x


def composition_sums(
    n: int, ranges, classes, n_classes: int, m_max: int, backend: str | None = None
) -> dict[tuple, Fraction]:
    """Exact sums of prod(n_e^-k_e) over compositions, keyed by per-class totals."""
    backend = backend or BACKEND
    ranges = [tuple(r) for r in ranges if r[2]]
    bits = max(1, m_max.bit_length())
    if backend == "cython" and _composition_residues is not None and n_classes * bits <= 63 and n > 0:
        return _multimodular(n, ranges, classes, n_classes, m_max, bits)
    acc, D = _pykernels.composition_numerators(n, ranges, classes, n_classes, m_max)
    return {k: Fraction(v, D) for k, v in acc.items()}


def _multimodular(n, ranges, classes, n_classes, m_max, bits) -> dict[tuple, Fraction]:
    D = _scale(m_max, ranges)
    count = comb(m_max, n)
    bound = count * D
    need, acc_bits = 0, 0
    while acc_bits <= bound.bit_length() + 1:
        need += 1
        acc_bits += 61
    primes = _primes(need)
    keys_bound = min(count, comb(m_max + n_classes, n_classes))
    capacity = 1
    while capacity < 2 * keys_bound + 8:
        capacity <<= 1
    raw = _composition_residues(n, ranges, list(classes), bits, m_max, primes, capacity)
    mask = (1 << bits) - 1
    dmods = [D % q for q in primes]
    out: dict[tuple, Fraction] = {}
    for key, res in raw.items():
        counts = tuple((key >> (bits * j)) & mask for j in range(n_classes))
        num = _crt([r * d % q for r, d, q in zip(res, dmods, primes)], primes)
        out[counts] = Fraction(num, D)
    return out
