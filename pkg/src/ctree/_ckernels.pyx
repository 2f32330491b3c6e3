# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled composition enumeration, exact via residues modulo word-size primes."""

from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    """
    static inline unsigned long long ct_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long m) {
        return (unsigned long long)(((unsigned __int128)a * b) % m);
    }
    """
    unsigned long long ct_mulmod(unsigned long long a, unsigned long long b,
                                 unsigned long long m) nogil

ctypedef unsigned long long u64

cdef u64 EMPTY = <u64>0xFFFFFFFFFFFFFFFF


def composition_residues(int n, ranges, classes, int bits, int m_max, primes, long capacity):
    """Residues of the grouped sums of 1/prod(n_e^k_e) modulo each prime.

    Keys are per-class part totals packed ``bits`` bits per class.
    Returns ``{packed_key: [residue per prime]}``.
    """
    cdef int n_ranges = len(ranges)
    cdef int n_primes = len(primes)
    cdef int kmax = 0
    cdef int i, j, r, k, lo, hi, total
    cdef u64 key, q, prod, h
    cdef long slot, mask = capacity - 1
    cdef int stride = m_max + 1

    if n <= 0 or n > m_max:
        return {}
    for lo_, hi_, k_ in ranges:
        if k_ > kmax:
            kmax = k_

    cdef int *rlo = <int *> malloc(max(n_ranges, 1) * sizeof(int))
    cdef int *rhi = <int *> malloc(max(n_ranges, 1) * sizeof(int))
    cdef int *rk = <int *> malloc(max(n_ranges, 1) * sizeof(int))
    cdef int *m = <int *> malloc(n * sizeof(int))
    cdef int *pre = <int *> malloc((n + 1) * sizeof(int))
    cdef u64 *shift = <u64 *> malloc(n * sizeof(u64))
    cdef u64 *qs = <u64 *> malloc(n_primes * sizeof(u64))
    cdef u64 *inv = <u64 *> malloc(n_primes * (kmax + 1) * stride * sizeof(u64))
    cdef u64 *keys = <u64 *> malloc(capacity * sizeof(u64))
    cdef u64 *acc = <u64 *> calloc(capacity * n_primes, sizeof(u64))
    try:
        if not (rlo and rhi and rk and m and pre and shift and qs and inv and keys and acc):
            raise MemoryError()
        for r in range(n_ranges):
            rlo[r], rhi[r], rk[r] = ranges[r]
        for i in range(n):
            shift[i] = <u64>classes[i] * bits
        for j in range(n_primes):
            q = primes[j]
            qs[j] = q
            for k in range(kmax + 1):
                for i in range(1, stride):
                    inv[(j * (kmax + 1) + k) * stride + i] = pow(pow(i, -1, q), k, q)
        for slot in range(capacity):
            keys[slot] = EMPTY

        for i in range(n):
            m[i] = 1
        total = n
        with nogil:
            while True:
                pre[0] = 0
                key = 0
                for i in range(n):
                    pre[i + 1] = pre[i] + m[i]
                    key += (<u64>m[i]) << shift[i]
                h = key * <u64>0x9E3779B97F4A7C15
                slot = <long>((h >> 17) & <u64>mask)
                while keys[slot] != EMPTY and keys[slot] != key:
                    slot = (slot + 1) & mask
                keys[slot] = key
                for j in range(n_primes):
                    q = qs[j]
                    prod = 1
                    for r in range(n_ranges):
                        prod = ct_mulmod(
                            prod,
                            inv[(j * (kmax + 1) + rk[r]) * stride + pre[rhi[r]] - pre[rlo[r]]],
                            q,
                        )
                    prod += acc[slot * n_primes + j]
                    if prod >= q:
                        prod -= q
                    acc[slot * n_primes + j] = prod
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
                    break

        out = {}
        for slot in range(capacity):
            if keys[slot] != EMPTY:
                out[keys[slot]] = [acc[slot * n_primes + j] for j in range(n_primes)]
        return out
    finally:
        free(rlo)
        free(rhi)
        free(rk)
        free(m)
        free(pre)
        free(shift)
        free(qs)
        free(inv)
        free(keys)
        free(acc)
