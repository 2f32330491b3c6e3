"""Pure-Python composition enumeration (reference and fallback backend)."""

from __future__ import annotations

from math import lcm


def _scale(m_max: int, ranges) -> int:
    L = lcm(*range(1, m_max + 1)) if m_max >= 1 else 1
    return L ** sum(k for _, _, k in ranges)


def composition_numerators(n: int, ranges, classes, n_classes: int, m_max: int) -> tuple[dict[tuple, int], int]:
    """Sum 1/prod(n_e^k_e) over compositions, grouped by per-class totals.

    ``ranges`` holds ``(lo, hi, k)``: n_e is the sum of parts lo..hi-1.
    Returns integer numerators over the common denominator D, and D.
    """
    D = _scale(m_max, ranges)
    acc: dict[tuple, int] = {}
    if n == 0 or n > m_max:
        return acc, D
    m = [1] * n
    total = n
    pre = [0] * (n + 1)
    while True:
        s = 0
        for i in range(n):
            s += m[i]
            pre[i + 1] = s
        den = 1
        for lo, hi, k in ranges:
            den *= (pre[hi] - pre[lo]) ** k
        counts = [0] * n_classes
        for i in range(n):
            counts[classes[i]] += m[i]
        key = tuple(counts)
        acc[key] = acc.get(key, 0) + D // den
        i = n - 1
        while i >= 0:
            if total < m_max:
                m[i] += 1
                total += 1
                break
            total -= m[i] - 1
            m[i] = 1
            i -= 1
        if i < 0:
            return acc, D
