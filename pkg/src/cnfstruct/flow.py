"""Dinic max-flow on small integer networks, with residual-graph cut extraction."""

from collections import deque


class FlowNetwork:
    """Directed network with integer capacities.

    Edges are stored in flat arrays; edge ``e ^ 1`` is the reverse of ``e``.
    """

    def __init__(self, n_nodes):
        self.n = n_nodes
        self.adj = [[] for _ in range(n_nodes)]
        self.head = []
        self.cap = []

    def add_edge(self, u, v, capacity):
        e = len(self.head)
        self.head += [v, u]
        self.cap += [capacity, 0]
        self.adj[u].append(e)
        self.adj[v].append(e + 1)
        return e

    def flow_on(self, e):
        """Flow currently routed through forward edge ``e``."""
        return self.cap[e ^ 1]

    def _levels(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                v = self.head[e]
                if self.cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _blocking_flow(self, s, t, level):
        head, cap, adj = self.head, self.cap, self.adj
        pointer = [0] * self.n
        total = 0
        while True:
            # iterative DFS for one augmenting path in the level graph
            path = []
            u = s
            while u != t:
                advanced = False
                while pointer[u] < len(adj[u]):
                    e = adj[u][pointer[u]]
                    v = head[e]
                    if cap[e] > 0 and level[v] == level[u] + 1:
                        path.append(e)
                        u = v
                        advanced = True
                        break
                    pointer[u] += 1
                if not advanced:
                    if u == s:
                        return total
                    level[u] = -1  # dead end
                    e = path.pop()
                    u = head[e ^ 1]
                    pointer[u] += 1
            pushed = min(cap[e] for e in path)
            for e in path:
                cap[e] -= pushed
                cap[e ^ 1] += pushed
            total += pushed

    def max_flow(self, s, t):
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            flow += self._blocking_flow(s, t, level)

    def reachable_from(self, s):
        """Nodes reachable from ``s`` in the residual graph (minimal source side)."""
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for e in self.adj[u]:
                v = self.head[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    def reaching(self, t):
        """Nodes that can still reach ``t`` in the residual graph.

        Their complement is the maximal source side of a minimum cut.
        """
        seen = {t}
        stack = [t]
        while stack:
            v = stack.pop()
            for e in self.adj[v]:
                # e runs v -> u; its reverse u -> v has residual cap[e ^ 1]
                u = self.head[e]
                if self.cap[e ^ 1] > 0 and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen
