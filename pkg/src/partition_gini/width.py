"""Width of the dominance poset: exact via Dilworth, lower bound via gini level sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .dominance import build_poset, is_antichain
from .errors import BudgetExceeded
from .gini import gini
from .matching import BitsetMatcher, _bits
from .partitions import Partition, count_partitions, enumerate_partitions, format_partition
from .series import DEFAULT_ENUM_BUDGET, gini_profile, level_set_argmax, profile_direct

DEFAULT_MATCHING_BUDGET = 5000


def max_level_set(n: int, max_nodes: int = DEFAULT_ENUM_BUDGET) -> list[Partition]:
    """A largest set of partitions of n with a common gini value.

    Ties between level sets of equal size go to the largest gini value.
    Members come back in enumeration order.
    """
    profile = gini_profile(n, profile_direct(n, max_nodes))
    g, _ = level_set_argmax(profile)
    return [p for p in enumerate_partitions(n) if gini(p) == g]


@dataclass(frozen=True)
class WidthResult:
    width: int
    antichain: list[Partition]
    chains: list[list[Partition]]
    matching_size: int


def exact_width(n: int, max_nodes: int = DEFAULT_MATCHING_BUDGET) -> WidthResult:
    """Width a(n) of P_n by Dilworth's theorem.

    Split every partition into a left and a right copy, join left x to right y
    when x is strictly dominated by y, and take a maximum matching. The minimum
    chain cover has P(n) - |matching| chains; König's construction on the same
    matching yields an antichain of that size.
    """
    if n < 1:
        raise ValueError("n must be positive")
    size = count_partitions(n)
    if size > max_nodes:
        raise BudgetExceeded("matching budget", size, max_nodes)
    poset = build_poset(n, max_nodes=max_nodes)
    nodes = poset.nodes
    adj = poset.strict_upsets()
    matcher = BitsetMatcher(adj)
    m = matcher.run()
    width = size - m

    # alternating reachability from unmatched left copies
    z_left = 0
    z_right = 0
    frontier = [u for u in range(size) if matcher.pair_left[u] == -1]
    for u in frontier:
        z_left |= 1 << u
    while frontier:
        nxt = []
        for u in frontier:
            fresh = adj[u] & ~z_right
            z_right |= fresh
            for v in _bits(fresh):
                w = matcher.pair_right[v]
                if w == -1:
                    raise AssertionError("augmenting path left after matching")
                if not (z_left >> w) & 1:
                    z_left |= 1 << w
                    nxt.append(w)
        frontier = nxt
    antichain_idx = [x for x in range(size) if (z_left >> x) & 1 and not (z_right >> x) & 1]

    chains = []
    for start in range(size):
        if matcher.pair_right[start] != -1:
            continue
        chain = [start]
        while matcher.pair_left[chain[-1]] != -1:
            chain.append(matcher.pair_left[chain[-1]])
        chains.append([nodes[i] for i in chain])

    antichain = [nodes[i] for i in antichain_idx]
    if len(antichain) != width or len(chains) != width:
        raise AssertionError("Dilworth certificate sizes disagree")
    return WidthResult(width, antichain, chains, m)


def early_expression(n: int) -> float:
    """n^(-5/2) * exp(pi * sqrt(2n/3)); a growth reference, not a bound by itself."""
    if n < 1:
        raise ValueError("n must be positive")
    return n ** -2.5 * math.exp(math.pi * math.sqrt(2 * n / 3))


@dataclass(frozen=True)
class WidthReport:
    n: int
    b_n: int
    a_n: Optional[int]
    witness_level_set: list[Partition]
    witness_antichain: Optional[list[Partition]]
    early_expr: float
    level_set_gini: int

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "b": self.b_n,
            "a": self.a_n,
            "early": self.early_expr,
            "level_set_gini": self.level_set_gini,
            "level_set": [format_partition(p) for p in self.witness_level_set],
            "antichain": None if self.witness_antichain is None
            else [format_partition(p) for p in self.witness_antichain],
        }


def width_report(
    n: int,
    compute_exact: bool = False,
    max_nodes: int = DEFAULT_ENUM_BUDGET,
    max_matching_nodes: int = DEFAULT_MATCHING_BUDGET,
) -> WidthReport:
    level = max_level_set(n, max_nodes)
    b = len(level)
    a = None
    antichain = None
    if compute_exact:
        res = exact_width(n, max_matching_nodes)
        a, antichain = res.width, res.antichain
        if b > a:
            raise AssertionError(f"b({n})={b} exceeds a({n})={a}")
    assert is_antichain(level)
    return WidthReport(n, b, a, level, antichain, early_expression(n), gini(level[0]))
