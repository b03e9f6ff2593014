"""Exact minimum path decomposition by branch and bound.

The search works on bitmasks of unused edges.  A new path is seeded with the
lowest unused edge (whose smaller endpoint is the lowest vertex that still has
unused edges) and grown first at its far end, then at its near end, so every
path through the seed edge is generated exactly once.  Once a path is closed
the residual edge set is an independent subproblem; failed residual sets are
memoised with the bound they failed under.

Pruning uses, per connected component of the residual graph, the largest of
half the number of odd vertices, half the maximum degree (rounded up) and 2
for a component in which every degree is even.  The path under construction is
folded into the bound as a virtual edge joining its open ends.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .decomposition import Decomposition, lower_bound, verify
from .errors import BudgetExhausted, InvariantViolation, NotConnected, NotOddGraph
from .graph import Graph, is_connected


@dataclass(frozen=True)
class OracleBudget:
    max_nodes: int = 20_000_000
    max_time: float = 120.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_time <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class OracleResult:
    p: int
    witness: Decomposition
    nodes_explored: int
    elapsed: float
    optimal: bool = True


class _OutOfBudget(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, budget: OracleBudget):
        self.g = g
        self.budget = budget
        self.ends = g.edges
        self.inc = [0] * g.n
        for i, (u, v) in enumerate(g.edges):
            self.inc[u] |= 1 << i
            self.inc[v] |= 1 << i
        self.full = (1 << g.m) - 1
        self.memo: dict[int, int] = {}
        self.nodes = 0
        self.start = time.perf_counter()
        self.deadline = self.start + budget.max_time

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _OutOfBudget
        if not self.nodes & 0x3FF and time.perf_counter() > self.deadline:
            raise _OutOfBudget

    def bound(self, mask: int, virtual: tuple = ()) -> int:
        """Lower bound on the paths needed for ``mask`` plus virtual links.

        ``virtual`` holds ``(x, y)`` pairs; ``y == -1`` is a pendant edge to a
        fresh vertex.
        """
        n = self.g.n
        parent = list(range(n + 1))
        deg = [0] * (n + 1)

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ends = self.ends
        m = mask
        while m:
            low = m & -m
            u, v = ends[low.bit_length() - 1]
            m ^= low
            deg[u] += 1
            deg[v] += 1
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        for x, y in virtual:
            deg[x] += 1
            if y == -1:
                # each pendant gets its own fresh odd vertex, counted below
                continue
            deg[y] += 1
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
        odd: dict[int, int] = {}
        top: dict[int, int] = {}
        for v in range(n):
            d = deg[v]
            if d:
                r = find(v)
                odd[r] = odd.get(r, 0) + (d & 1)
                if d > top.get(r, 0):
                    top[r] = d
        for x, y in virtual:
            if y == -1:
                r = find(x)
                odd[r] += 1
        total = 0
        for r, o in odd.items():
            total += max(o // 2, (top[r] + 1) // 2, 2 if o == 0 else 1)
        return total

    # -- exhaustive search -------------------------------------------------

    def solve(self, mask: int, k: int):
        """A decomposition of ``mask`` into at most ``k`` paths, or None."""
        self.tick()
        if not mask:
            return []
        if k <= 0 or self.memo.get(mask, 0) > k:
            return None
        if self.bound(mask) > k:
            self.memo[mask] = max(self.memo.get(mask, 0), k + 1)
            return None
        low = mask & -mask
        a, b = self.ends[low.bit_length() - 1]
        found = self._grow_tail([a, b], (1 << a) | (1 << b), mask ^ low, k)
        if found is None:
            self.memo[mask] = max(self.memo.get(mask, 0), k + 1)
        return found

    def _grow_tail(self, path, on_path, rest, k):
        self.tick()
        if self.bound(rest, ((path[0], path[-1]),)) > k:
            return None
        x = path[-1]
        cand = rest & self.inc[x]
        while cand:
            low = cand & -cand
            cand ^= low
            u, v = self.ends[low.bit_length() - 1]
            y = v if u == x else u
            if on_path >> y & 1:
                continue
            path.append(y)
            found = self._grow_tail(path, on_path | (1 << y), rest ^ low, k)
            path.pop()
            if found is not None:
                return found
        return self._grow_head(path, on_path, rest, k)

    def _grow_head(self, path, on_path, rest, k):
        self.tick()
        if self.bound(rest, ((path[0], -1),)) > k:
            return None
        x = path[0]
        cand = rest & self.inc[x]
        while cand:
            low = cand & -cand
            cand ^= low
            u, v = self.ends[low.bit_length() - 1]
            y = v if u == x else u
            if on_path >> y & 1:
                continue
            path.insert(0, y)
            found = self._grow_head(path, on_path | (1 << y), rest ^ low, k)
            path.pop(0)
            if found is not None:
                return found
        sub = self.solve(rest, k - 1)
        if sub is None:
            return None
        return [tuple(path)] + sub

    # -- greedy incumbent --------------------------------------------------

    def greedy(self) -> list[tuple[int, ...]]:
        mask = self.full
        out = []
        while mask:
            low = mask & -mask
            mask ^= low
            a, b = self.ends[low.bit_length() - 1]
            path = [a, b]
            on_path = (1 << a) | (1 << b)
            for at_tail in (True, False):
                while True:
                    x = path[-1] if at_tail else path[0]
                    cand = mask & self.inc[x]
                    step = None
                    while cand:
                        lb = cand & -cand
                        cand ^= lb
                        u, v = self.ends[lb.bit_length() - 1]
                        y = v if u == x else u
                        if not on_path >> y & 1:
                            step = (lb, y)
                            break
                    if step is None:
                        break
                    mask ^= step[0]
                    on_path |= 1 << step[1]
                    if at_tail:
                        path.append(step[1])
                    else:
                        path.insert(0, step[1])
            out.append(tuple(path))
        return out


def _checked(g: Graph, paths, method: str = "exact") -> Decomposition:
    d = Decomposition(g, tuple(paths), method)
    report = verify(g, d)
    if not report.valid:
        raise InvariantViolation(f"oracle produced an invalid witness: {report.violations}")
    return d


def min_path_decomposition(g: Graph, budget: OracleBudget | None = None) -> OracleResult:
    """Minimum number of paths ``p(g)`` with a verified witness.

    On budget exhaustion the best decomposition found so far is returned with
    ``optimal=False``.
    """
    budget = budget or OracleBudget()
    s = _Search(g, budget)
    incumbent = s.greedy()
    best = None
    optimal = True
    try:
        for k in range(s.bound(s.full) if g.m else 0, len(incumbent)):
            found = s.solve(s.full, k)
            if found is not None:
                best = found
                break
    except _OutOfBudget:
        optimal = False
    if best is None:
        best = incumbent
    witness = _checked(g, best)
    return OracleResult(p=len(best), witness=witness, nodes_explored=s.nodes,
                        elapsed=time.perf_counter() - s.start, optimal=optimal)


def decompose_to_target(g: Graph, target: int, budget: OracleBudget | None = None):
    """A verified decomposition into at most ``target`` paths, or None if none exists.

    Raises BudgetExhausted when the search is cut off before an answer.
    """
    s = _Search(g, budget or OracleBudget())
    try:
        found = s.solve(s.full, target)
    except _OutOfBudget:
        raise BudgetExhausted(
            f"search for {target} paths stopped after {s.nodes} nodes") from None
    return None if found is None else _checked(g, found)


def decompose_odd_graph(g: Graph, budget: OracleBudget | None = None) -> Decomposition:
    """Split a connected graph with all degrees odd into exactly n/2 paths."""
    if g.n == 0 or any(d % 2 == 0 for d in g.degrees):
        raise NotOddGraph("every vertex must have odd degree")
    if not is_connected(g):
        raise NotConnected("odd-graph decomposition needs a connected graph")
    target = g.n // 2
    d = decompose_to_target(g, target, budget)
    if d is None or d.path_count != target:
        # cannot happen for a connected odd graph; the count is also a lower bound
        raise InvariantViolation(f"no decomposition into {target} paths was found")
    assert lower_bound(g) == target
    return d
