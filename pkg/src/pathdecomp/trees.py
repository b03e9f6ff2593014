"""Optimal path decompositions of trees by leaf re-attachment."""

from __future__ import annotations

import heapq
from collections import deque

from .decomposition import Decomposition
from .errors import InvariantViolation, NotATree
from .graph import Graph, is_tree


def leaf_pruning_order(t: Graph) -> list[tuple[int, int]]:
    """Remove the lowest-id leaf until one vertex is left.

    Returns the removed ``(leaf, neighbour)`` pairs in removal order.
    """
    deg = list(t.degrees)
    alive = [True] * t.n
    leaves = [v for v in range(t.n) if deg[v] == 1]
    heapq.heapify(leaves)
    order = []
    remaining = t.n
    while remaining > 1:
        u = heapq.heappop(leaves)
        if not alive[u] or deg[u] != 1:
            continue
        v = next(w for w in t.adj[u] if alive[w])
        alive[u] = False
        remaining -= 1
        deg[u] = 0
        deg[v] -= 1
        order.append((u, v))
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    return order


def decompose_tree(t: Graph) -> Decomposition:
    """Decompose a tree into exactly ``n_o(t)/2`` paths.

    Leaves are re-attached in reverse pruning order.  A leaf hanging on a
    vertex of odd degree extends the unique path ending there; on a vertex of
    even degree it starts a new one-edge path.
    """
    if not is_tree(t):
        raise NotATree("decompose_tree needs a connected graph with n - 1 edges")
    paths: list[deque] = []
    ending: dict[int, list[int]] = {}
    deg = [0] * t.n

    for u, v in reversed(leaf_pruning_order(t)):
        if deg[v] % 2:
            owners = ending.get(v)
            if not owners:
                raise InvariantViolation(f"odd vertex {v} ends no path")
            idx = min(owners)
            owners.remove(idx)
            p = paths[idx]
            if p[-1] == v:
                p.append(u)
            else:
                p.appendleft(u)
        else:
            idx = len(paths)
            paths.append(deque((v, u)))
            ending.setdefault(v, []).append(idx)
        ending.setdefault(u, []).append(idx)
        deg[u] += 1
        deg[v] += 1

    return Decomposition(t, tuple(tuple(p) for p in paths), "tree")
