"""Exact Dedekind sums s(h, k) and the reciprocity law.

    s(h, k) = sum_{r=1}^{k-1} (r/k) ((hr/k))

with ((x)) the sawtooth: x - floor(x) - 1/2 off the integers, 0 on them.
For coprime h, k the summation arguments hr/k are never integers, so the
direct summand x - [x] - 1/2 and the sawtooth convention agree on every
in-scope input.

All arithmetic is exact; no floating point is used anywhere in this module.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError


def sawtooth(x: Fraction) -> Fraction:
    """The sawtooth ((x)): x - floor(x) - 1/2, and 0 at integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dedekind_sum(h: int, k: int) -> Fraction:
    """Exact s(h, k) for k >= 1 and gcd(h, k) = 1.

    Evaluated over integers: with m_r = h*r mod k (never 0 here),
    ((hr/k)) = m_r/k - 1/2, so

        s(h, k) = (sum_r r*m_r)/k^2 - (k-1)/4,

    a single exact Fraction at the end of an O(k) integer loop.
    """
    if k <= 0:
        raise DomainError(f"dedekind_sum needs k >= 1, got k={k}")
    if math.gcd(h, k) != 1:
        raise DomainError(f"dedekind_sum needs gcd(h, k) = 1, got ({h}, {k})")
    if k == 1:
        return Fraction(0)
    h %= k
    total = 0
    m = 0
    for r in range(1, k):
        m += h
        if m >= k:
            m -= k
        total += r * m
    return Fraction(total, k * k) - Fraction(k - 1, 4)


def reciprocity_defect(h: int, k: int) -> Fraction:
    """s(h,k) + s(k,h) - (h/12k + k/12h - 1/4 + 1/12hk); exactly 0."""
    if h <= 0 or k <= 0:
        raise DomainError(f"reciprocity_defect needs h, k >= 1, got ({h}, {k})")
    rhs = (
        Fraction(h, 12 * k)
        + Fraction(k, 12 * h)
        - Fraction(1, 4)
        + Fraction(1, 12 * h * k)
    )
    return dedekind_sum(h, k) + dedekind_sum(k, h) - rhs
