"""Simple undirected graphs, Cartesian products, subdivision and generators.

Vertices are dense integers ``0..n-1``.  Product graphs keep the pair of factor
ids of every vertex in ``labels``; the flat id of ``(a, b)`` in ``G x H`` is
``a * n(H) + b``.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    EdgeNotPresent,
    EmptyFactor,
    EndpointOutOfRange,
    GenerationFailed,
    InvalidParams,
    ParseError,
    SelfLoop,
)

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    labels: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParams(f"negative vertex count {self.n}")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise EndpointOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            seen.add(norm_edge(u, v))
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidParams("labels must name every vertex")

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_set

    def is_odd(self, v: int) -> bool:
        return self.degrees[v] % 2 == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged."""
    return Graph(n, tuple((int(u), int(v)) for u, v in edges))


@dataclass(frozen=True)
class DegreeProfile:
    n_o: int
    n_e: int
    max_degree: int
    degrees: tuple[int, ...]


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees
    n_o = sum(d % 2 for d in degs)
    return DegreeProfile(n_o=n_o, n_e=g.n - n_o, max_degree=max(degs, default=0), degrees=degs)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
                    comp.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    if g.n == 0 or h.n == 0:
        raise EmptyFactor("both factors need at least one vertex")
    nh = h.n
    edges = []
    for a in range(g.n):
        for b, c in h.edges:
            edges.append((a * nh + b, a * nh + c))
    for a, c in g.edges:
        for b in range(nh):
            edges.append((a * nh + b, c * nh + b))
    labels = tuple((a, b) for a in range(g.n) for b in range(nh))
    return Graph(g.n * nh, tuple(edges), labels)


def subdivide(g: Graph, e: Sequence[int]) -> Graph:
    """Replace edge ``e`` by a two-edge path through the new vertex ``n``."""
    u, v = norm_edge(*e)
    if not g.has_edge(u, v):
        raise EdgeNotPresent(f"({u}, {v}) is not an edge")
    x = g.n
    edges = [f for f in g.edges if f != (u, v)] + [(u, x), (x, v)]
    return Graph(g.n + 1, tuple(edges))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph with vertex ``order[i]`` renamed to ``i``."""
    pos = {v: i for i, v in enumerate(order)}
    return Graph(g.n, tuple((pos[u], pos[v]) for u, v in g.edges))


# ---------------------------------------------------------------------------
# families

def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParams("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    if leaves < 0:
        raise InvalidParams("star needs a non-negative leaf count")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("complete graph needs n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def grid_graph(n: int, t: int) -> Graph:
    return cartesian_product(path_graph(n), path_graph(t))


def prufer_to_edges(seq: Sequence[int], n: int) -> list[Edge]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append(norm_edge(leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append(norm_edge(u, v))
    return edges


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n < 1:
        raise InvalidParams("random_tree needs n >= 1")
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return Graph(2, ((0, 1),))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph(n, tuple(prufer_to_edges(seq, n)))


def random_connected(n: int, rng: random.Random, p: float = 0.3) -> Graph:
    """Random tree plus every non-tree pair independently with probability ``p``."""
    tree = random_tree(n, rng)
    extra = [(i, j) for i in range(n) for j in range(i + 1, n)
             if not tree.has_edge(i, j) and rng.random() < p]
    return Graph(n, tree.edges + tuple(extra))


def _toggle(edges: set[Edge], e: Edge) -> None:
    if e in edges:
        edges.remove(e)
    else:
        edges.add(e)


def random_even(n: int, rng: random.Random, extra_cycles: int | None = None,
                retries: int = 64) -> Graph:
    """Connected graph with every degree even.

    Starts from a random Hamiltonian cycle and takes symmetric differences with
    random short cycles; parity is preserved by each step, connectivity is
    re-checked.
    """
    if n == 1:
        return Graph(1, ())
    if n < 3:
        raise InvalidParams("no connected even graph with an edge has fewer than 3 vertices")
    if extra_cycles is None:
        extra_cycles = rng.randint(0, n)
    for _ in range(retries):
        order = list(range(n))
        rng.shuffle(order)
        edges = {norm_edge(order[i], order[(i + 1) % n]) for i in range(n)}
        for _ in range(extra_cycles):
            k = rng.randint(3, n)
            cyc = rng.sample(range(n), k)
            trial = set(edges)
            for i in range(k):
                _toggle(trial, norm_edge(cyc[i], cyc[(i + 1) % k]))
            if is_connected(Graph(n, tuple(trial))):
                edges = trial
        g = Graph(n, tuple(edges))
        if is_connected(g) and all(d % 2 == 0 for d in g.degrees):
            return g
    raise GenerationFailed(f"random_even(n={n}) failed after {retries} attempts")


def random_odd(n: int, rng: random.Random, p: float = 0.2, retries: int = 256) -> Graph:
    """Connected graph with every degree odd (``n`` must be even).

    Draws a random connected graph, then repairs parity by adding edges between
    pairs of even vertices, or a two-edge detour through a third vertex when
    the pair is already adjacent.
    """
    if n < 2 or n % 2:
        raise InvalidParams("odd graphs need an even order n >= 2")
    for _ in range(retries):
        base = random_connected(n, rng, p)
        edges = set(base.edges)
        evens = [v for v in range(n) if base.degree(v) % 2 == 0]
        rng.shuffle(evens)
        ok = True
        for a, b in zip(evens[::2], evens[1::2]):
            if norm_edge(a, b) not in edges:
                edges.add(norm_edge(a, b))
                continue
            mids = [x for x in range(n) if x not in (a, b)
                    and norm_edge(a, x) not in edges and norm_edge(x, b) not in edges]
            if not mids:
                ok = False
                break
            x = rng.choice(mids)
            edges.add(norm_edge(a, x))
            edges.add(norm_edge(x, b))
        if not ok:
            continue
        g = Graph(n, tuple(edges))
        if all(d % 2 for d in g.degrees):
            return g
    raise GenerationFailed(f"random_odd(n={n}) failed after {retries} attempts")


FAMILIES = ("path", "cycle", "star", "complete", "grid", "random_tree",
            "random_connected", "random_even", "random_odd")


def gen_family(kind: str, seed: int = 0, **params) -> Graph:
    """Generate a member of a named family; random kinds are seeded.

    >>> gen_family("path", n=4).edges
    ((0, 1), (1, 2), (2, 3))
    """
    rng = random.Random(seed)
    try:
        if kind == "path":
            return path_graph(params["n"])
        if kind == "cycle":
            return cycle_graph(params["n"])
        if kind == "star":
            return star_graph(params["leaves"] if "leaves" in params else params["n"] - 1)
        if kind == "complete":
            return complete_graph(params["n"])
        if kind == "grid":
            return grid_graph(params["n"], params["t"])
        if kind == "random_tree":
            return random_tree(params["n"], rng)
        if kind == "random_connected":
            return random_connected(params["n"], rng, params.get("p", 0.3))
        if kind == "random_even":
            return random_even(params["n"], rng)
        if kind == "random_odd":
            return random_odd(params["n"], rng)
    except KeyError as exc:
        raise InvalidParams(f"{kind} needs parameter {exc.args[0]!r}") from None
    raise InvalidParams(f"unknown family {kind!r}")


# ---------------------------------------------------------------------------
# edge-list text format

def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; blank lines and ``#`` comments are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("empty input", 1)
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"expected header 'n m', got {header!r}", lineno)
    n, m = int(parts[0]), int(parts[1])
    body = rows[1:]
    if len(body) != m:
        where = body[-1][0] if body else lineno
        raise ParseError(f"header announces {m} edges but {len(body)} follow", where)
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise ParseError(f"endpoint out of range [0, {n})", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        edges.append((u, v))
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
