"""Small residual-network max-flow engine (Dinic).

Arcs are stored in pairs: arc ``i`` and its reverse ``i ^ 1``.  An undirected
unit-capacity edge is one pair with capacity 1 on both sides, which models
"net flow at most 1 in whichever direction is used".  Capacities are integers;
everything is deterministic (adjacency in insertion order).
"""

from __future__ import annotations

from collections import deque

INF = 10**9


class FlowNet:
    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add_arc(self, u: int, v: int, cap: int, rev_cap: int = 0) -> int:
        """Add arc u->v with capacity cap and its reverse with rev_cap.
        Returns the arc index (reverse is index ^ 1)."""
        idx = len(self.head)
        self.adj[u].append(idx)
        self.head.append(v)
        self.cap.append(cap)
        self.adj[v].append(idx + 1)
        self.head.append(u)
        self.cap.append(rev_cap)
        return idx

    def max_flow(self, s: int, t: int, limit: int = INF) -> int:
        """Push flow from s to t, stopping early once `limit` is reached."""
        total = 0
        while total < limit:
            level = self._bfs_levels(s, t)
            if level[t] < 0:
                break
            it = [0] * self.n
            while total < limit:
                pushed = self._dfs(s, t, limit - total, level, it)
                if pushed == 0:
                    break
                total += pushed
        return total

    def _bfs_levels(self, s: int, t: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for idx in self.adj[u]:
                v = self.head[idx]
                if self.cap[idx] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _dfs(self, u: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return limit
        while it[u] < len(self.adj[u]):
            idx = self.adj[u][it[u]]
            v = self.head[idx]
            if self.cap[idx] > 0 and level[v] == level[u] + 1:
                pushed = self._dfs(v, t, min(limit, self.cap[idx]), level, it)
                if pushed > 0:
                    self.cap[idx] -= pushed
                    self.cap[idx ^ 1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def residual_reachable(self, s: int) -> set[int]:
        """Vertices reachable from s through arcs with residual capacity."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for idx in self.adj[u]:
                v = self.head[idx]
                if self.cap[idx] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen

    def flow_on(self, arc_idx: int, original_cap: int) -> int:
        """Flow currently routed through the arc added with `original_cap`."""
        return original_cap - self.cap[arc_idx]
