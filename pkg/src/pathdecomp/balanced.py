"""Balanced path decompositions and their chain/cycle linking structure.

In a balanced decomposition every odd vertex ends exactly one path and every
even vertex ends exactly two, so there are ``n_o/2 + n_e`` paths.  Joining the
paths at shared ends gives an auxiliary multigraph with degree 1 at odd
vertices and 2 at even vertices; its components are chains (odd to odd) and
cycles (through even vertices only).  The layered product construction
consumes that structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import Decomposition, PathClass, classify_path, verify
from .errors import EdgelessGraph, InvariantViolation, NotConnected
from .graph import Graph, is_connected
from .oracle import OracleBudget, decompose_odd_graph


@dataclass(frozen=True)
class BalancedDecomposition:
    base: Decomposition
    end_count: tuple[int, ...]
    n_o1: int
    n_o2: int

    @property
    def paths(self):
        return self.base.paths

    @property
    def path_count(self) -> int:
        return self.base.path_count


@dataclass(frozen=True)
class Chain:
    """Paths linked end to end.

    ``paths[j]`` runs from ``vertices[j]`` to ``vertices[j + 1]`` and
    ``oriented[j]`` is that path written in this direction.  For a cycle the
    last vertex equals the first.
    """
    paths: tuple[int, ...]
    vertices: tuple[int, ...]
    oriented: tuple[tuple[int, ...], ...]
    closed: bool

    @property
    def joints(self) -> tuple[int, ...]:
        """The shared vertices between consecutive paths."""
        if self.closed:
            return self.vertices[:-1]
        return self.vertices[1:-1]


@dataclass(frozen=True)
class LinkingStructure:
    chains: tuple[Chain, ...]
    cycles: tuple[Chain, ...]
    n_o1: int
    n_o2: int

    @property
    def joints(self) -> dict[tuple[str, int, int], int]:
        """Map ``(kind, index, position)`` to the even vertex joining paths
        ``position - 1`` and ``position`` (cyclically for cycles)."""
        out = {}
        for i, c in enumerate(self.chains):
            for pos, v in enumerate(c.joints, 1):
                out[("chain", i, pos)] = v
        for i, c in enumerate(self.cycles):
            for pos, v in enumerate(c.joints):
                out[("cycle", i, pos)] = v
        return out


def _odd_ends(g: Graph, paths) -> tuple[int, int]:
    n_o1 = n_o2 = 0
    for p in paths:
        cls = classify_path(g, p)
        if cls is PathClass.OddOdd:
            n_o1 += 2
        elif cls is PathClass.OddEven:
            n_o2 += 1
    return n_o1, n_o2


def balanced_decomposition(h: Graph, budget: OracleBudget | None = None) -> BalancedDecomposition:
    """Decompose ``h`` so that odd vertices end one path and even vertices two.

    The pendant construction: hang a new leaf on every even vertex, split the
    resulting odd graph into n/2 paths, strip the pendant edges, then split a
    path at every even vertex that no longer ends any path.
    """
    if h.m == 0:
        raise EdgelessGraph("balanced decomposition needs at least one edge")
    if not is_connected(h):
        raise NotConnected("balanced decomposition needs a connected graph")
    n = h.n
    evens = [v for v in range(n) if h.degree(v) % 2 == 0]
    if not evens:
        paths = [list(p) for p in decompose_odd_graph(h, budget).paths]
    else:
        pendant = {n + i: v for i, v in enumerate(evens)}
        augmented = Graph(n + len(evens), h.edges + tuple((v, x) for x, v in pendant.items()))
        paths = []
        for p in decompose_odd_graph(augmented, budget).paths:
            p = [v for v in p if v < n]
            if len(p) >= 2:
                paths.append(p)

    ends = [0] * n
    for p in paths:
        ends[p[0]] += 1
        ends[p[-1]] += 1
    for v in evens:
        if ends[v] not in (0, 2):
            raise InvariantViolation(f"even vertex {v} ends {ends[v]} paths after stripping pendants")

    for v in evens:
        if ends[v]:
            continue
        for idx, p in enumerate(paths):
            if v in p[1:-1]:
                cut = p.index(v)
                paths[idx:idx + 1] = [p[:cut + 1], p[cut:]]
                ends[v] = 2
                break
        else:
            raise InvariantViolation(f"even vertex {v} lies on no path")

    base = Decomposition(h, tuple(tuple(p) for p in paths), "balanced")
    report = verify(h, base)
    if not report.valid:
        raise InvariantViolation(f"balanced decomposition failed verification: {report.violations}")
    for v in range(n):
        if ends[v] != (1 if h.is_odd(v) else 2):
            raise InvariantViolation(f"vertex {v} ends {ends[v]} paths")
    n_o1, n_o2 = _odd_ends(h, base.paths)
    return BalancedDecomposition(base, tuple(ends), n_o1, n_o2)


def linking_structure(h: Graph, b: BalancedDecomposition | Decomposition) -> LinkingStructure:
    """Chains and cycles formed by linking the paths of ``b`` at shared ends."""
    base = b.base if isinstance(b, BalancedDecomposition) else b
    paths = base.paths
    at: list[list[int]] = [[] for _ in range(h.n)]
    for idx, p in enumerate(paths):
        if len(p) < 2:
            raise InvariantViolation(f"path {idx} has no edge")
        at[p[0]].append(idx)
        at[p[-1]].append(idx)
    for v in range(h.n):
        want = 1 if h.is_odd(v) else 2
        if len(at[v]) != want:
            raise InvariantViolation(
                f"vertex {v} is an end of {len(at[v])} paths, expected {want}")

    used = [False] * len(paths)

    def walk(start: int, first: int) -> Chain:
        idxs, verts, oriented = [], [start], []
        v, idx = start, first
        while True:
            used[idx] = True
            p = paths[idx]
            q = p if p[0] == v else p[::-1]
            idxs.append(idx)
            oriented.append(q)
            v = q[-1]
            verts.append(v)
            nxt = [j for j in at[v] if not used[j]]
            if not nxt:
                break
            idx = nxt[0]
        return Chain(tuple(idxs), tuple(verts), tuple(oriented), closed=verts[0] == verts[-1])

    chains = []
    for v in range(h.n):
        if h.is_odd(v) and not used[at[v][0]]:
            chains.append(walk(v, at[v][0]))
    cycles = []
    for idx in range(len(paths)):
        if not used[idx]:
            start = min(paths[idx][0], paths[idx][-1])
            cycles.append(walk(start, idx))

    for c in chains:
        if c.closed or not (h.is_odd(c.vertices[0]) and h.is_odd(c.vertices[-1])):
            raise InvariantViolation("chain terminals must be distinct odd vertices")
    for c in cycles:
        if not c.closed:
            raise InvariantViolation("cycle failed to close")
    for c in chains + cycles:
        if any(h.is_odd(v) for v in c.joints):
            raise InvariantViolation("joints must be even vertices")

    n_o1 = sum(2 for c in chains if len(c.paths) == 1)
    n_o2 = sum(2 for c in chains if len(c.paths) > 1)
    return LinkingStructure(tuple(chains), tuple(cycles), n_o1, n_o2)
