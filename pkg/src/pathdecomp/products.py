"""Product decompositions driven by a tight decomposition of one factor.

Given a decomposition of ``G`` into ``n_o(G)/2`` paths, every vertex of ``G``
is made *real* on exactly one path through it and *virtual* on the others.
For each path ``Q`` with ``k`` real vertices, the block of ``G x H`` made of the
``Q``-edges in every ``H``-copy plus the ``H``-layers at the real vertices of
``Q`` is a subdivision of ``P_k x H``.  Decomposing ``P_k x H`` and expanding
the subdivided rungs covers that block, and the blocks partition ``G x H``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .decomposition import Decomposition, path_edges, verify
from .errors import (
    BadOrder,
    CorrespondenceMismatch,
    InvariantViolation,
    NotATree,
    NotConnected,
    NotTightDecomposition,
    OddVertexNotAnEnd,
)
from .graph import Graph, cartesian_product, degree_profile, is_connected, is_tree, norm_edge, path_graph, subdivide
from .layered import decompose_grid, decompose_path_product
from .oracle import OracleBudget
from .trees import decompose_tree


@dataclass(frozen=True)
class VirtualRealPath:
    vertices: tuple[int, ...]
    real: tuple[bool, ...]

    def __post_init__(self):
        if len(self.vertices) < 2 or len(self.real) != len(self.vertices):
            raise ValueError("a virtual-real path needs >= 2 vertices and one flag per vertex")
        if not (self.real[0] and self.real[-1]):
            raise ValueError("both ends of a virtual-real path must be real")

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def virtual_count(self) -> int:
        return self.real.count(False)

    @property
    def real_positions(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.real) if r)


@dataclass(frozen=True)
class RealAssignment:
    paths: tuple[VirtualRealPath, ...]
    real_home: tuple[int, ...]


def assign_virtual_real(g: Graph, d: Decomposition, seed: int | None = None) -> RealAssignment:
    """Mark each vertex real on exactly one path of a tight decomposition.

    Odd vertices are real on the path they end.  Even vertices are real on the
    lowest-indexed path through them, or a seeded random one when ``seed`` is
    given.
    """
    report = verify(g, d)
    if not report.valid:
        raise NotTightDecomposition(f"not a valid decomposition: {report.violations[0]}")
    n_o = degree_profile(g).n_o
    if d.path_count != n_o // 2:
        raise NotTightDecomposition(f"{d.path_count} paths, need n_o/2 = {n_o // 2}")
    rng = random.Random(seed) if seed is not None else None

    home = [-1] * g.n
    for idx, p in enumerate(d.paths):
        for v in (p[0], p[-1]):
            if not g.is_odd(v):
                raise OddVertexNotAnEnd(f"even vertex {v} ends path {idx}")
            home[v] = idx
    through: dict[int, list[int]] = {}
    for idx, p in enumerate(d.paths):
        for v in p:
            through.setdefault(v, []).append(idx)
    for v in range(g.n):
        if g.is_odd(v):
            if home[v] < 0:
                raise OddVertexNotAnEnd(f"odd vertex {v} ends no path")
            continue
        options = through.get(v)
        if not options:
            raise NotTightDecomposition(f"vertex {v} lies on no path")
        home[v] = rng.choice(options) if rng else options[0]

    vr = tuple(VirtualRealPath(p, tuple(home[v] == idx for v in p))
               for idx, p in enumerate(d.paths))
    if sum(q.order - q.virtual_count for q in vr) != g.n:
        raise InvariantViolation("real vertices must number exactly n(g)")
    return RealAssignment(vr, tuple(home))


# ---------------------------------------------------------------------------
# subdivisions

@dataclass(frozen=True)
class SubdivisionMap:
    """How ``contracted`` sits inside ``host`` as a subdivision.

    ``vertex_map[v]`` is the host vertex of contracted vertex ``v`` and
    ``edge_paths[(u, v)]`` (with ``u < v``) is the host path from
    ``vertex_map[u]`` to ``vertex_map[v]`` replacing that edge.
    """
    contracted: Graph
    host: Graph
    vertex_map: tuple[int, ...]
    edge_paths: dict

    def check(self) -> None:
        c, host = self.contracted, self.host
        if len(self.vertex_map) != c.n or len(set(self.vertex_map)) != c.n:
            raise CorrespondenceMismatch("vertex map must be injective on every contracted vertex")
        images = set(self.vertex_map)
        covered = set()
        for e in c.edges:
            hp = self.edge_paths.get(e)
            if hp is None:
                raise CorrespondenceMismatch(f"no host path for contracted edge {e}")
            if (hp[0], hp[-1]) != (self.vertex_map[e[0]], self.vertex_map[e[1]]):
                raise CorrespondenceMismatch(f"host path for {e} has the wrong ends")
            for x in hp[1:-1]:
                if x in images or host.degree(x) != 2:
                    raise CorrespondenceMismatch(f"interior vertex {x} of {e} is not a subdivision vertex")
            for f in path_edges(hp):
                if not host.has_edge(*f) or f in covered:
                    raise CorrespondenceMismatch(f"host edge {f} missing or used twice")
                covered.add(f)
        if len(covered) != host.m:
            raise CorrespondenceMismatch("host has edges outside the subdivided contracted graph")


def identity_map(g: Graph) -> SubdivisionMap:
    return SubdivisionMap(g, g, tuple(range(g.n)), {e: e for e in g.edges})


def subdivision_map(g: Graph, e) -> SubdivisionMap:
    """Correspondence between ``g`` and ``subdivide(g, e)``."""
    host = subdivide(g, e)
    u, v = norm_edge(*e)
    paths = {f: f for f in g.edges}
    paths[(u, v)] = (u, g.n, v)
    return SubdivisionMap(g, host, tuple(range(g.n)), paths)


def expand_subdivision(d: Decomposition, corr: SubdivisionMap) -> Decomposition:
    """Carry a decomposition of the contracted graph over to the subdivided host."""
    if d.host != corr.contracted:
        raise CorrespondenceMismatch("decomposition is not over the contracted graph")
    corr.check()
    vm = corr.vertex_map
    out = []
    for p in d.paths:
        seq = [vm[p[0]]]
        for a, b in zip(p, p[1:]):
            hp = corr.edge_paths.get(norm_edge(a, b))
            if hp is None:
                raise CorrespondenceMismatch(f"({a}, {b}) is not a contracted edge")
            if a > b:
                hp = hp[::-1]
            seq.extend(hp[1:])
        out.append(tuple(seq))
    res = Decomposition(corr.host, tuple(out), d.method)
    if verify(corr.contracted, d).valid and not verify(corr.host, res).valid:
        raise CorrespondenceMismatch("expansion of a valid decomposition is invalid")
    return res


def contract_decomposition(d: Decomposition, corr: SubdivisionMap) -> Decomposition:
    """Inverse of :func:`expand_subdivision` for paths that end at contracted vertices."""
    if d.host != corr.host:
        raise CorrespondenceMismatch("decomposition is not over the host graph")
    back = {x: v for v, x in enumerate(corr.vertex_map)}
    out = []
    for p in d.paths:
        if p[0] not in back or p[-1] not in back:
            raise CorrespondenceMismatch(f"path {p} ends inside a subdivided edge")
        out.append(tuple(back[x] for x in p if x in back))
    return Decomposition(corr.contracted, tuple(out), d.method)


# ---------------------------------------------------------------------------
# product constructions

def _assemble(host: Graph, blocks: list[tuple[Decomposition, SubdivisionMap]], method: str) -> Decomposition:
    owner: dict = {}
    for b, (_, corr) in enumerate(blocks):
        for e in corr.host.edges:
            if e in owner:
                raise InvariantViolation(f"host edge {e} assigned to blocks {owner[e]} and {b}")
            owner[e] = b
    if len(owner) != host.m or not all(host.has_edge(*e) for e in owner):
        raise InvariantViolation("blocks do not partition the product's edges")
    paths = []
    for d, corr in blocks:
        paths.extend(expand_subdivision(d, corr).paths)
    out = Decomposition(host, tuple(paths), method)
    report = verify(host, out)
    if not report.valid:
        raise InvariantViolation(f"{method} composition failed verification: "
                                 f"{[str(v) for v in report.violations[:5]]}")
    return out


def decompose_product(g: Graph, h: Graph, d_g: Decomposition, seed: int | None = None,
                      budget: OracleBudget | None = None) -> Decomposition:
    """Decompose ``g x h`` into at most ``ceil(n(g) n(h) / 2)`` paths.

    ``d_g`` must split ``g`` into ``n_o(g)/2`` paths (see :func:`decompose_tree`
    and :func:`pathdecomp.oracle.decompose_odd_graph`).
    """
    if g.n < 2:
        raise BadOrder("the first factor needs at least 2 vertices")
    if not (is_connected(g) and is_connected(h)):
        raise NotConnected("both factors must be connected")
    if d_g.host != g:
        raise NotTightDecomposition("d_g is not a decomposition of g")
    assign = assign_virtual_real(g, d_g, seed)
    host = cartesian_product(g, h)
    nh = h.n
    if h.m == 0:
        paths = tuple(tuple(v * nh for v in p) for p in d_g.paths)
        return Decomposition(host, paths, "virtual_real")

    blocks = []
    for q in assign.paths:
        reals = q.real_positions
        k = len(reals)
        layered = decompose_path_product(k, h, budget)
        vmap = tuple(q.vertices[reals[a]] * nh + v for a in range(k) for v in range(nh))
        edge_paths = {}
        block_edges = []
        for a in range(k):
            base = q.vertices[reals[a]] * nh
            for x, y in h.edges:
                edge_paths[(a * nh + x, a * nh + y)] = (base + x, base + y)
                block_edges.append((base + x, base + y))
        for a in range(k - 1):
            span = q.vertices[reals[a]:reals[a + 1] + 1]
            for v in range(nh):
                edge_paths[(a * nh + v, (a + 1) * nh + v)] = tuple(x * nh + v for x in span)
                block_edges.extend((x * nh + v, y * nh + v) for x, y in zip(span, span[1:]))
        block_host = Graph(host.n, tuple(block_edges))
        blocks.append((layered, SubdivisionMap(layered.host, block_host, vmap, edge_paths)))

    out = _assemble(host, blocks, "virtual_real")
    bound = -(-g.n * h.n // 2)
    if out.path_count > bound:
        raise InvariantViolation(f"{out.path_count} paths exceeds ceil(mn/2) = {bound}")
    return out


def decompose_path_tree_product(n: int, t: Graph) -> Decomposition:
    """Optimal decomposition of ``P_n x T`` for ``n >= 4`` and a tree ``T``.

    Uses ``n(T) + (n - 4) n_o(T) / 2`` paths, which meets the lower bound.
    """
    if n < 4:
        raise BadOrder("the path factor needs at least 4 vertices")
    if not is_tree(t) or t.n < 2:
        raise NotATree("second factor must be a tree with at least 2 vertices")
    m = t.n
    host = cartesian_product(path_graph(n), t)
    assign = assign_virtual_real(t, decompose_tree(t))

    blocks = []
    for q in assign.paths:
        reals = q.real_positions
        k = len(reals)
        grid = decompose_grid(n, k)
        # grid vertex (i, a) has id i*k + a; it sits at layer i over real vertex a of q
        vmap = tuple(i * m + q.vertices[reals[a]] for i in range(n) for a in range(k))
        edge_paths = {}
        block_edges = []
        for a in range(k):
            x = q.vertices[reals[a]]
            for i in range(n - 1):
                edge_paths[(i * k + a, (i + 1) * k + a)] = (i * m + x, (i + 1) * m + x)
                block_edges.append((i * m + x, (i + 1) * m + x))
        for a in range(k - 1):
            span = q.vertices[reals[a]:reals[a + 1] + 1]
            for i in range(n):
                edge_paths[(i * k + a, i * k + a + 1)] = tuple(i * m + x for x in span)
                block_edges.extend((i * m + x, i * m + y) for x, y in zip(span, span[1:]))
        block_host = Graph(host.n, tuple(block_edges))
        blocks.append((grid, SubdivisionMap(grid.host, block_host, vmap, edge_paths)))

    out = _assemble(host, blocks, "virtual_real")
    expected = m + (n - 4) * degree_profile(t).n_o // 2
    if out.path_count != expected:
        raise InvariantViolation(f"path x tree product gave {out.path_count} paths, expected {expected}")
    return out
