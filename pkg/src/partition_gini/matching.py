"""Hopcroft-Karp maximum matching on bipartite graphs given as bitsets.

``adj[u]`` is an int whose bit v is set when left vertex u may pair with right
vertex v. Left and right vertex sets are both ``range(len(adj))``.
"""

from __future__ import annotations

from collections import deque

INF = 1 << 62


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BitsetMatcher:
    def __init__(self, adj: list[int], n_right: int | None = None):
        self.adj = adj
        self.n_left = len(adj)
        self.n_right = len(adj) if n_right is None else n_right
        self.pair_left = [-1] * self.n_left
        self.pair_right = [-1] * self.n_right

    def _greedy(self):
        taken = 0
        for u, nbrs in enumerate(self.adj):
            free = nbrs & ~taken
            if free:
                low = free & -free
                v = low.bit_length() - 1
                taken |= low
                self.pair_left[u] = v
                self.pair_right[v] = u

    def _bfs(self):
        """Layer the left vertices; return (dist, right-vertex mask per layer, free-right
        layer) or None when no augmenting path exists."""
        dist = [INF] * self.n_left
        queue = deque()
        for u in range(self.n_left):
            if self.pair_left[u] == -1:
                dist[u] = 0
                queue.append(u)
        seen_right = 0
        layer_right: dict[int, int] = {}
        free_layer = INF
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du + 1 > free_layer:
                break
            fresh = self.adj[u] & ~seen_right
            if not fresh:
                continue
            seen_right |= fresh
            for v in _bits(fresh):
                w = self.pair_right[v]
                if w == -1:
                    free_layer = du + 1
                else:
                    layer_right[du + 1] = layer_right.get(du + 1, 0) | (1 << v)
                    dist[w] = du + 1
                    queue.append(w)
        if free_layer == INF:
            return None
        return dist, layer_right, free_layer

    def _free_right_mask(self) -> int:
        m = 0
        for v, w in enumerate(self.pair_right):
            if w == -1:
                m |= 1 << v
        return m

    def run(self) -> int:
        """Compute a maximum matching; return its size."""
        self._greedy()
        while True:
            layered = self._bfs()
            if layered is None:
                break
            dist, layer_right, free_layer = layered
            free_right = self._free_right_mask()
            visited = 0
            for root in range(self.n_left):
                if self.pair_left[root] != -1:
                    continue
                visited = self._augment(root, dist, layer_right, free_layer,
                                        free_right, visited)
        return sum(1 for v in self.pair_left if v != -1)

    def _augment(self, root, dist, layer_right, free_layer, free_right, visited):
        def candidates(u):
            d = dist[u] + 1
            if d == free_layer:
                allowed = free_right
            else:
                allowed = layer_right.get(d, 0)
            return self.adj[u] & allowed & ~visited

        stack = [root]
        chosen: list[int] = []
        cand = [candidates(root)]
        while stack:
            u = stack[-1]
            c = cand[-1] & ~visited
            if not c:
                dist[u] = INF
                stack.pop()
                cand.pop()
                if chosen:
                    chosen.pop()
                continue
            low = c & -c
            v = low.bit_length() - 1
            cand[-1] = c ^ low
            visited |= low
            w = self.pair_right[v]
            chosen.append(v)
            if w == -1:
                for uu, vv in zip(stack, chosen):
                    self.pair_left[uu] = vv
                    self.pair_right[vv] = uu
                return visited
            stack.append(w)
            cand.append(candidates(w))
        return visited
