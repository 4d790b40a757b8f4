"""Gini index of a partition, e2 (two routes), Lorenz curve, normalizations.

All values are exact: integers for areas, Fraction for normalized indices.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .partitions import Partition, padded_parts


def _require_positive(p: Partition):
    if p.weight < 1:
        raise ValueError("needs a partition of a positive integer")


def gini(p: Partition) -> int:
    """C(n+1, 2) - sum(i * p_i), i counted from 1 over the padded parts."""
    _require_positive(p)
    n = p.weight
    # zero padding contributes nothing to the weighted sum
    return math.comb(n + 1, 2) - sum(i * a for i, a in enumerate(p.parts, 1))


def e2_direct(p: Partition) -> int:
    """Sum of x_i * x_j over unordered pairs of parts."""
    parts = p.parts
    total = 0
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            total += parts[i] * parts[j]
    return total


def e2_lemma1(p: Partition) -> int:
    _require_positive(p)
    return math.comb(p.weight + 1, 2) - sum(math.comb(a + 1, 2) for a in p.parts)


def _check_x(x, n: int):
    if x < 0 or x > n:
        raise ValueError(f"x={x} outside [0, {n}]")


def lorenz(p: Partition, x) -> int:
    """Lorenz step function of p at x in [0, n].

    On (k-1, k] the value is the sum of the last k entries of the parts padded
    to length n, so it climbs from the smallest parts upward.
    """
    n = p.weight
    _check_x(x, n)
    if x == 0:
        return 0
    k = math.ceil(Fraction(x))
    return sum(padded_parts(p, n)[n - k:])


def line_of_equality(x, n: int | None = None) -> int:
    if x < 0 or (n is not None and x > n):
        raise ValueError(f"x={x} outside [0, {n}]")
    return math.ceil(Fraction(x))


def gini_via_integral(p: Partition) -> int:
    """Area between the line of equality and the Lorenz curve.

    Both curves are constant on each (k-1, k], so the integral is the sum of
    k - L(k) over the unit intervals.
    """
    _require_positive(p)
    n = p.weight
    padded = padded_parts(p, n)
    area = 0
    tail = 0
    for k in range(1, n + 1):
        tail += padded[n - k]
        area += k - tail
    return area


def normalized_gini(p: Partition) -> Fraction:
    """g / C(n, 2); defined for n >= 2."""
    if p.weight < 2:
        raise ValueError("normalization by C(n,2) needs n >= 2")
    return Fraction(gini(p), math.comb(p.weight, 2))


def normalized_gini_euclidean(p: Partition) -> Fraction:
    """2g / n^2, the restriction of the usual normalized index on R^n."""
    _require_positive(p)
    return Fraction(2 * gini(p), p.weight**2)
