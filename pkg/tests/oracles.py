"""Brute-force reference computations, independent of the package internals."""

from itertools import combinations, product


def brute_partitions(n):
    """All partitions of n as tuples, from compositions sorted and deduplicated."""
    if n == 0:
        return {()}
    out = set()
    # a composition of n is fixed by which of the n-1 gaps carry a cut
    for cuts in product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


def reflect(parts):
    """Conjugate by transposing the set of diagram cells."""
    cells = {(c, r) for r, a in enumerate(parts) for c in range(a)}
    rows = {}
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
    return tuple(rows[r] for r in sorted(rows))


def e2_pairs(parts):
    return sum(a * b for a, b in combinations(parts, 2))


def dominated(mu, lam):
    """mu <= lam in dominance, by literal prefix sums over every k."""
    n = sum(lam)
    mu = list(mu) + [0] * (n - len(mu))
    lam = list(lam) + [0] * (n - len(lam))
    return all(sum(mu[:k]) <= sum(lam[:k]) for k in range(1, n + 1))


def strictly_below(mu, lam):
    return mu != lam and dominated(mu, lam)


def brute_covers(lam, mu, universe):
    """lam covers mu: mu < lam with nothing strictly between."""
    if not strictly_below(mu, lam):
        return False
    return not any(strictly_below(mu, r) and strictly_below(r, lam) for r in universe)


def brute_max_antichain(universe):
    """Largest pairwise-incomparable subset, grown one candidate at a time."""
    items = sorted(universe, reverse=True)
    incomp = {
        (a, b): not dominated(a, b) and not dominated(b, a)
        for a in items for b in items
    }
    best = []

    def grow(chosen, start):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for i in range(start, len(items)):
            c = items[i]
            if len(chosen) + (len(items) - i) <= len(best):
                return
            if all(incomp[c, x] for x in chosen):
                chosen.append(c)
                grow(chosen, i + 1)
                chosen.pop()

    grow([], 0)
    return best


def gini_closed(parts):
    n = sum(parts)
    return n * (n + 1) // 2 - sum(i * a for i, a in enumerate(parts, 1))
