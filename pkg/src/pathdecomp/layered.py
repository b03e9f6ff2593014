"""Decompositions of products with a path factor, built layer by layer.

The host is ``P_m x H`` with flat ids ``i * n(H) + v`` for layer ``i``
(0-based here, 1-based in the index tables below) and vertex ``v`` of ``H``.
A *rung* at ``v`` between layers ``i`` and ``i + 1`` is the edge joining the
two copies of ``v``.
"""

from __future__ import annotations

from .balanced import Chain, balanced_decomposition, linking_structure
from .decomposition import Decomposition, verify
from .errors import (
    BadOrder,
    EdgelessGraph,
    InvariantViolation,
    NotConnected,
    NotEvenGraph,
    TooSmall,
)
from .graph import Graph, cartesian_product, degree_profile, grid_graph, is_connected, path_graph
from .oracle import OracleBudget


def rung_sets(m: int) -> tuple[list[int], list[int]]:
    """Rung indices (1-based) absorbed at the start and at the end of a path's snake.

    A snake over ``P_m`` walks the path forward in odd layers and backward in
    even layers, switching layers through rungs at alternate ends.
    """
    if m % 2 == 0:
        start_side = list(range(2, m - 1, 2))    # 2, 4, ..., m-2
        end_side = list(range(1, m, 2))          # 1, 3, ..., m-1
    else:
        start_side = list(range(2, m, 2))        # 2, 4, ..., m-1
        end_side = list(range(1, m - 1, 2))      # 1, 3, ..., m-2
    return start_side, end_side


def snake(m: int, q: tuple[int, ...], nh: int) -> tuple[int, ...]:
    """One path through every layer copy of ``q``, joined by alternating rungs."""
    out = []
    for i in range(m):
        seg = q if i % 2 == 0 else q[::-1]
        out.extend(i * nh + v for v in seg)
    return tuple(out)


def rung(i: int, v: int, nh: int) -> tuple[int, int]:
    """Rung at ``v`` between 1-based layers ``i`` and ``i + 1``."""
    return ((i - 1) * nh + v, i * nh + v)


def chain_paths(m: int, c: Chain, nh: int) -> list[tuple[int, ...]]:
    """Snakes for every path of a chain or cycle, plus unabsorbed terminal rungs."""
    out = [snake(m, q, nh) for q in c.oriented]
    if not c.closed:
        start_side, end_side = rung_sets(m)
        first, last = c.vertices[0], c.vertices[-1]
        out.extend(rung(i, first, nh) for i in end_side)
        out.extend(rung(i, last, nh) for i in start_side)
    return out


def _check(host: Graph, paths, method: str) -> Decomposition:
    d = Decomposition(host, tuple(paths), method)
    report = verify(host, d)
    if not report.valid:
        raise InvariantViolation(f"{method} construction failed verification: "
                                 f"{[str(v) for v in report.violations[:5]]}")
    return d


def decompose_path_product(m: int, h: Graph, budget: OracleBudget | None = None) -> Decomposition:
    """Decompose ``P_m x h`` into at most ``m*n_o(h)/2 + n_e(h)`` paths."""
    if m < 2:
        raise BadOrder("the path factor needs at least 2 vertices")
    if h.m == 0:
        raise EdgelessGraph("h needs at least one edge")
    if not is_connected(h):
        raise NotConnected("h must be connected")
    links = linking_structure(h, balanced_decomposition(h, budget))
    paths = []
    for c in links.chains + links.cycles:
        paths.extend(chain_paths(m, c, h.n))
    host = cartesian_product(path_graph(m), h)
    d = _check(host, paths, "layered")
    prof = degree_profile(h)
    if d.path_count != m * prof.n_o // 2 + prof.n_e:
        raise InvariantViolation(f"layered construction produced {d.path_count} paths")
    return d


def decompose_path_even_product(m: int, h: Graph, budget: OracleBudget | None = None) -> Decomposition:
    """Decompose ``P_m x h`` for an even graph ``h`` into exactly ``n(h)`` paths."""
    if h.m == 0:
        raise EdgelessGraph("h needs at least one edge")
    if any(d % 2 for d in h.degrees):
        raise NotEvenGraph("every vertex of h must have even degree")
    d = decompose_path_product(m, h, budget)
    if d.path_count != h.n:
        raise InvariantViolation(f"even-factor product gave {d.path_count} paths, expected {h.n}")
    return d


def _grid_paths(n: int, t: int) -> list[list[tuple[int, int]]]:
    """Paths of ``P_n x P_t`` (``n >= 4``, ``t >= 2``) in 1-based ``(i, j)`` coordinates."""
    paths = []
    col = lambda i, js: [(i, j) for j in js]
    row = lambda j, is_: [(i, j) for i in is_]
    top = range(1, t + 1)
    down = range(t, 0, -1)
    if n % 2 == 0:
        border = ([(2, 1)] + col(1, top) + row(t, range(2, n + 1))
                  + col(n, range(t - 1, 0, -1)) + [(n - 1, 1)])
        combs = range(2, n - 1, 2)        # 2, 4, ..., n-2
        singles = range(3, n - 2, 2)      # 3, 5, ..., n-3
        extra = []
    else:
        border = ([(2, 1)] + col(1, top) + row(t, range(2, n + 1))
                  + col(n, range(t - 1, 0, -1)) + [(n - 1, 1), (n - 2, 1)])
        combs = range(2, n - 2, 2)        # 2, 4, ..., n-3
        singles = range(3, n - 3, 2)      # 3, 5, ..., n-4
        extra = [col(n - 1, top)]
    paths.append(border)
    for i in combs:
        paths.append(col(i, down) + col(i + 1, top))
    for i in singles:
        paths.append([(i, 1), (i + 1, 1)])
    paths.extend(extra)
    for j in range(2, t):
        paths.append(row(j, range(1, n + 1)))
    return paths


def decompose_grid(n: int, t: int) -> Decomposition:
    """Optimal decomposition of the grid ``P_n x P_t`` when ``max(n, t) >= 4``.

    For ``t >= 2`` (after putting the long side first) it has ``n + t - 4``
    paths; ``t == 1`` is the path itself.
    """
    if n < 1 or t < 1:
        raise BadOrder("grid sides must be positive")
    if max(n, t) < 4:
        raise TooSmall("explicit grid construction needs a side of length >= 4")
    host = grid_graph(n, t)
    if min(n, t) == 1:
        return _check(host, [tuple(range(n * t))], "grid")
    swap = n < 4
    a, b = (t, n) if swap else (n, t)
    flat = []
    for p in _grid_paths(a, b):
        if swap:
            flat.append(tuple((j - 1) * t + (i - 1) for i, j in p))
        else:
            flat.append(tuple((i - 1) * t + (j - 1) for i, j in p))
    d = _check(host, flat, "grid")
    if d.path_count != n + t - 4:
        raise InvariantViolation(f"grid construction gave {d.path_count} paths")
    return d
