"""Truncated expansion of the gini generating function and level-set statistics.

The coefficient of x^n collects q^(C(n+1,2) - g(lam)) over partitions lam of n.
It is computed two ways: by multiplying the geometric series
1/(1 - q^C(k+1,2) x^k) for k = 1..N, and by enumerating partitions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import BudgetExceeded
from .gini import gini
from .partitions import count_partitions, enumerate_partitions

DEFAULT_ENUM_BUDGET = 10**6
_MAX_EXPONENT = 2**63 - 1


class QPolynomial:
    """Sparse polynomial in q with nonnegative integer coefficients.

    Zero coefficients are never stored; iteration is by ascending exponent.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[int, int] = {}
        for e, c in items:
            if e < 0 or c < 0:
                raise ValueError("exponents and coefficients must be nonnegative")
            if c:
                d[e] = d.get(e, 0) + c
        self._terms = dict(sorted(d.items()))

    @classmethod
    def _trusted(cls, d: dict[int, int]) -> "QPolynomial":
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(d.items()))
        return obj

    def terms(self) -> list[tuple[int, int]]:
        return list(self._terms.items())

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def total(self) -> int:
        """Value at q = 1."""
        return sum(self._terms.values())

    def min_exponent(self) -> int:
        return next(iter(self._terms))

    def max_exponent(self) -> int:
        return next(reversed(self._terms))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"QPolynomial({self.terms()})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in self._terms.items():
            coef = "" if c == 1 and e else str(c)
            var = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            out.append(coef + var)
        return "+".join(out)


def _check_exponent_range(N: int):
    if math.comb(N + 1, 2) > _MAX_EXPONENT:
        raise OverflowError(f"q-exponents for N={N} exceed 64-bit range")


def expand_product(N: int) -> list[QPolynomial]:
    """Coefficients of x^1..x^N in prod_k 1/(1 - q^C(k+1,2) x^k), minus 1.

    Returns a list whose entry n - 1 is the coefficient of x^n.
    """
    if N < 1:
        raise ValueError("N must be positive")
    _check_exponent_range(N)
    # by x-degree: q-exponent -> coefficient
    acc: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(N)]
    for k in range(1, N + 1):
        tk = math.comb(k + 1, 2)
        new: list[dict[int, int]] = [dict(row) for row in acc]  # j = 0 term
        for j in range(1, N // k + 1):
            shift_x = j * k
            shift_q = j * tk
            for d in range(0, N - shift_x + 1):
                src = acc[d]
                if not src:
                    continue
                dst = new[d + shift_x]
                for e, c in src.items():
                    e2 = e + shift_q
                    dst[e2] = dst.get(e2, 0) + c
        acc = new
    return [QPolynomial._trusted(acc[n]) for n in range(1, N + 1)]


def profile_direct(n: int, max_nodes: int = DEFAULT_ENUM_BUDGET) -> QPolynomial:
    """Coefficient of x^n by enumerating every partition of n."""
    if n < 1:
        raise ValueError("n must be positive")
    size = count_partitions(n)
    if size > max_nodes:
        raise BudgetExceeded("enumeration budget", size, max_nodes)
    top = math.comb(n + 1, 2)
    d: dict[int, int] = {}
    for p in enumerate_partitions(n):
        e = top - gini(p)
        d[e] = d.get(e, 0) + 1
    return QPolynomial._trusted(d)


@dataclass(frozen=True)
class GiniProfile:
    n: int
    counts: dict[int, int]  # gini value -> number of partitions of n

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def gini_profile(n: int, source: QPolynomial) -> GiniProfile:
    """Translate the x^n coefficient into counts per gini value."""
    top = math.comb(n + 1, 2)
    counts = {}
    for e, c in source.terms():
        if not n <= e <= top:
            raise ValueError(f"exponent {e} outside [{n}, {top}] for n={n}")
        counts[top - e] = c
    return GiniProfile(n, dict(sorted(counts.items())))


def level_set_argmax(profile: GiniProfile) -> tuple[int, int]:
    """(gini value, size) of the largest level set.

    Ties go to the largest gini value, i.e. the lowest power of q carrying the
    maximal coefficient.
    """
    g, c = max(profile.counts.items(), key=lambda gc: (gc[1], gc[0]))
    return g, c


def level_set_max(n: int) -> int:
    """b(n): the size of the largest gini level set among partitions of n."""
    if n < 1:
        raise ValueError("n must be positive")
    coeff = expand_product(n)[n - 1]
    return level_set_argmax(gini_profile(n, coeff))[1]


def coefficient_json(n: int, poly: QPolynomial) -> dict:
    return {"n": n, "terms": [[e, c] for e, c in poly.terms()]}


def render_row(n: int, poly: QPolynomial) -> str:
    """Human form of c(q) x^n, e.g. ``qx`` or ``(q^2+q^3)x^2``."""
    body = str(poly)
    if len(poly) > 1:
        body = f"({body})"
    xs = "x" if n == 1 else f"x^{n}"
    return body + xs
