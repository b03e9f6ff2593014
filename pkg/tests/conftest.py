import random

import pytest

from pathdecomp.graph import Graph, random_connected, random_tree

ACCEPTANCE_LINES: list[str] = []


def _is_path_block(edges) -> bool:
    deg: dict[int, int] = {}
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    if max(deg.values()) > 2 or len(deg) != len(edges) + 1:
        return False
    start = next(iter(deg))
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(deg)


def _is_linear_forest(edges) -> bool:
    deg: dict[int, int] = {}
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        if deg[u] > 2 or deg[v] > 2:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def brute_force_p(g: Graph) -> int:
    """Minimum path count by enumerating every partition of the edge set.

    Deliberately unrelated to the branch-and-bound search; only usable for
    roughly ten edges or fewer.
    """
    edges = list(g.edges)
    if not edges:
        return 0
    best = [len(edges)]

    def rec(i, blocks):
        if len(blocks) >= best[0]:
            return
        if i == len(edges):
            if all(_is_path_block(b) for b in blocks):
                best[0] = len(blocks)
            return
        e = edges[i]
        for b in blocks:
            b.append(e)
            if _is_linear_forest(b):
                rec(i + 1, blocks)
            b.pop()
        blocks.append([e])
        rec(i + 1, blocks)
        blocks.pop()

    rec(0, [])
    return best[0]


def seeded_connected(seed: int, n_lo: int = 2, n_hi: int = 7) -> Graph:
    rng = random.Random(seed)
    return random_connected(rng.randint(n_lo, n_hi), rng, rng.choice([0.15, 0.3, 0.5, 0.8]))


def seeded_tree(seed: int, n_lo: int = 2, n_hi: int = 12) -> Graph:
    rng = random.Random(seed)
    return random_tree(rng.randint(n_lo, n_hi), rng)


@pytest.fixture
def brute():
    return brute_force_p


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
