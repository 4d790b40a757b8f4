"""Integer partitions: representation, enumeration, conjugation, counting."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import PartitionError


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts.

    Zero padding is never stored; use :func:`padded_parts` for that view.
    """

    parts: tuple[int, ...]
    weight: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        for a in parts:
            if not isinstance(a, int) or a < 1:
                raise PartitionError(f"parts must be positive integers: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return format_partition(self)


# (part, multiplicity) pairs, parts strictly decreasing
RepeatedForm = tuple[tuple[int, int], ...]


def make_partition(parts: Sequence[int]) -> Partition:
    """Build a partition from a sequence that may carry trailing zeros."""
    seq = list(parts)
    if any(a < 0 for a in seq):
        raise PartitionError(f"negative entry in {tuple(seq)}")
    while seq and seq[-1] == 0:
        seq.pop()
    if 0 in seq:
        raise PartitionError(f"zero before a nonzero entry in {tuple(parts)}")
    return Partition(tuple(seq))


def padded_parts(p: Partition, length: int) -> tuple[int, ...]:
    if length < len(p.parts):
        raise PartitionError(
            f"cannot pad {len(p.parts)} parts down to length {length}"
        )
    return p.parts + (0,) * (length - len(p.parts))


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram: part j counts the parts of p that are >= j."""
    parts = p.parts
    if not parts:
        return p
    out = []
    i = len(parts)
    for j in range(1, parts[0] + 1):
        while parts[i - 1] < j:
            i -= 1
        out.append(i)
    return Partition(tuple(out))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n in descending lexicographic order.

    Starts at (n) and ends at (1,)*n; n = 0 yields the single empty partition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition(())
        return
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        # rightmost part larger than 1
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(parts) - i  # trailing ones plus the unit taken from parts[i]
        v = parts[i] - 1
        del parts[i:]
        parts.append(v)
        while rem > v:
            parts.append(v)
            rem -= v
        if rem:
            parts.append(rem)


_pcache = [1]


def count_partitions(n: int) -> int:
    """P(n) by Euler's pentagonal-number recurrence; exact for all n."""
    if n < 0:
        return 0
    while len(_pcache) <= n:
        m = len(_pcache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _pcache[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * _pcache[m - g2]
            k += 1
        _pcache.append(total)
    return _pcache[n]


def to_repeated_form(p: Partition) -> RepeatedForm:
    out: list[tuple[int, int]] = []
    for a in p.parts:
        if out and out[-1][0] == a:
            out[-1] = (a, out[-1][1] + 1)
        else:
            out.append((a, 1))
    return tuple(out)


def from_repeated_form(entries: Iterable[tuple[int, int]]) -> Partition:
    entries = tuple(entries)
    for (a, _), (b, _) in zip(entries, entries[1:]):
        if a <= b:
            raise PartitionError("repeated form parts must strictly decrease")
    parts: list[int] = []
    for part, mult in entries:
        if mult < 1:
            raise PartitionError("multiplicities must be positive")
        parts.extend([part] * mult)
    return Partition(tuple(parts))


_BRACKET = re.compile(r"^\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*$")


class PartitionParseError(ValueError):
    """Text is not in the ``[p1,p2,...]`` grammar."""


def parse_partition(text: str) -> Partition:
    """Parse the bracket form ``[4,3,1,1]`` (whitespace allowed, ``[]`` is empty).

    Raises PartitionParseError for malformed text and PartitionError for
    well-formed text that is not a partition.
    """
    m = _BRACKET.match(text)
    if not m:
        raise PartitionParseError(f"cannot parse partition from {text!r}")
    body = m.group(1).strip()
    nums = [int(tok) for tok in body.split(",")] if body else []
    return make_partition(nums)


def format_partition(p: Partition) -> str:
    return "[" + ",".join(map(str, p.parts)) + "]"
