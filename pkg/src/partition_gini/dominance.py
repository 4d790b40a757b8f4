"""Dominance order on partitions of n, Brylawski covers and the Hasse diagram."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import BudgetExceeded, WeightMismatch
from .gini import gini
from .partitions import (
    Partition,
    count_partitions,
    enumerate_partitions,
    format_partition,
    padded_parts,
)

DEFAULT_NODE_BUDGET = 10**6


class Comparison(enum.Enum):
    LESS = "LESS"
    GREATER = "GREATER"
    EQUAL = "EQUAL"
    INCOMPARABLE = "INCOMPARABLE"


def _same_weight(a: Partition, b: Partition):
    if a.weight != b.weight:
        raise WeightMismatch(f"weights differ: {a.weight} vs {b.weight}")


def compare(a: Partition, b: Partition) -> Comparison:
    """Dominance comparison by prefix sums. LESS means a is strictly below b."""
    _same_weight(a, b)
    if a == b:
        return Comparison.EQUAL
    n = a.weight
    sa = sb = 0
    a_above = b_above = False
    for x, y in zip(padded_parts(a, n), padded_parts(b, n)):
        sa += x
        sb += y
        if sa > sb:
            a_above = True
        elif sb > sa:
            b_above = True
        if a_above and b_above:
            return Comparison.INCOMPARABLE
    return Comparison.GREATER if a_above else Comparison.LESS


def covers(upper: Partition, lower: Partition) -> bool:
    """True iff upper is lower with one box moved from row k up to row i < k,
    where k = i + 1 or lower_i == lower_k."""
    _same_weight(upper, lower)
    n = upper.weight
    u = padded_parts(upper, n)
    w = padded_parts(lower, n)
    diff = [j for j in range(n) if u[j] != w[j]]
    if len(diff) != 2:
        return False
    i, k = diff
    if u[i] != w[i] + 1 or u[k] != w[k] - 1:
        return False
    return k == i + 1 or w[i] == w[k]


def upper_covers(p: Partition) -> list[Partition]:
    """All partitions covering p, found by single-box moves."""
    parts = list(p.parts) + [0]
    m = len(parts)
    out = []
    for k in range(1, m):
        if parts[k] == 0:
            break
        # row k must stay at least as long as row k+1 after losing a box
        if parts[k] - 1 < (parts[k + 1] if k + 1 < m else 0):
            continue
        for i in range(k):
            if not (k == i + 1 or parts[i] == parts[k]):
                continue
            if i > 0 and parts[i - 1] < parts[i] + 1:
                continue
            new = parts[:]
            new[i] += 1
            new[k] -= 1
            while new and new[-1] == 0:
                new.pop()
            out.append(Partition(tuple(new)))
    return out


@dataclass(frozen=True)
class DominancePoset:
    """All partitions of n in enumeration order with the cover edges.

    Edges are (lower, upper) index pairs into ``nodes``.
    """

    n: int
    nodes: tuple[Partition, ...]
    cover_edges: tuple[tuple[int, int], ...]

    def index(self, p: Partition) -> int:
        return self._index[p]

    @cached_property
    def _index(self) -> dict[Partition, int]:
        return {p: i for i, p in enumerate(self.nodes)}

    def strict_upsets(self) -> list[int]:
        """Bitset per node of the nodes strictly above it.

        Enumeration order is a reverse linear extension (anything above a node
        comes earlier), so one forward pass over the covers closes the relation.
        """
        ups_of: list[list[int]] = [[] for _ in self.nodes]
        for lo, hi in self.cover_edges:
            ups_of[lo].append(hi)
        up = [0] * len(self.nodes)
        for i in range(len(self.nodes)):
            acc = 0
            for j in ups_of[i]:
                acc |= up[j] | (1 << j)
            up[i] = acc
        return up


def build_poset(n: int, max_nodes: int = DEFAULT_NODE_BUDGET) -> DominancePoset:
    if n < 1:
        raise ValueError("n must be positive")
    size = count_partitions(n)
    if size > max_nodes:
        raise BudgetExceeded("node budget", size, max_nodes)
    nodes = tuple(enumerate_partitions(n))
    index = {p: i for i, p in enumerate(nodes)}
    edges = []
    for lo, p in enumerate(nodes):
        for q in upper_covers(p):
            edges.append((lo, index[q]))
    edges.sort()
    return DominancePoset(n, nodes, tuple(edges))


def is_antichain(ps: Iterable[Partition]) -> bool:
    ps = list(dict.fromkeys(ps))
    if ps:
        w = ps[0].weight
        for p in ps:
            if p.weight != w:
                raise WeightMismatch("antichain members must share a weight")
    return all(compare(a, b) is Comparison.INCOMPARABLE for a, b in combinations(ps, 2))


def to_dot(poset: DominancePoset) -> str:
    """Graphviz text of the Hasse diagram, upper partitions drawn on top.

    Nodes sharing a gini value sit on one rank; they are always incomparable.
    """
    gs = [gini(p) for p in poset.nodes]
    lines = [f"digraph P{poset.n} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, p in enumerate(poset.nodes):
        lines.append(f'  n{i} [label="{format_partition(p)}", gini={gs[i]}];')
    by_g: dict[int, list[int]] = {}
    for i, g in enumerate(gs):
        by_g.setdefault(g, []).append(i)
    for g in sorted(by_g):
        members = " ".join(f"n{i};" for i in by_g[g])
        lines.append(f"  {{ rank=same; {members} }}")
    for lo, hi in poset.cover_edges:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(poset: DominancePoset) -> dict:
    return {
        "n": poset.n,
        "nodes": [format_partition(p) for p in poset.nodes],
        "gini": [gini(p) for p in poset.nodes],
        "edges": [list(e) for e in poset.cover_edges],
    }
