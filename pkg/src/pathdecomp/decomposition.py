"""Path decompositions, the strict verifier, path classification and the lower bound."""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import HostMismatch, ParseError, TrivialPath
from .graph import Graph, degree_profile, norm_edge

PathSeq = tuple[int, ...]

METHODS = ("tree", "grid", "layered", "balanced", "virtual_real", "exact", "manual")


@dataclass(frozen=True)
class Decomposition:
    host: Graph
    paths: tuple[PathSeq, ...]
    method: str = "manual"

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(tuple(int(v) for v in p) for p in self.paths))

    @property
    def path_count(self) -> int:
        return len(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def end_counts(self) -> list[int]:
        """How many paths end at each vertex (both ends counted)."""
        counts = [0] * self.host.n
        for p in self.paths:
            if len(p) >= 2:
                counts[p[0]] += 1
                counts[p[-1]] += 1
        return counts


def path_edges(p: Sequence[int]) -> list[tuple[int, int]]:
    return [norm_edge(p[i], p[i + 1]) for i in range(len(p) - 1)]


class ViolationKind(str, enum.Enum):
    NotAPath = "NotAPath"
    NonEdge = "NonEdge"
    DuplicateEdge = "DuplicateEdge"
    UncoveredEdge = "UncoveredEdge"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.detail}"


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    path_count: int
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.valid


def verify(g: Graph, d: Decomposition) -> VerifyReport:
    """Check that ``d`` partitions the edges of ``g`` into simple paths.

    Every problem found is reported; the check does not stop at the first one.
    """
    if d.host != g:
        raise HostMismatch("decomposition host differs from the graph being verified")
    violations: list[Violation] = []
    used: Counter = Counter()
    lone_vertex_ok = g.n == 1 and g.m == 0
    for idx, p in enumerate(d.paths):
        if len(p) == 0:
            violations.append(Violation(ViolationKind.NotAPath, f"path {idx} is empty"))
            continue
        bad = [v for v in p if not 0 <= v < g.n]
        if bad:
            violations.append(Violation(ViolationKind.NotAPath,
                                        f"path {idx} has vertices outside the host: {bad}"))
            continue
        if len(p) == 1 and not lone_vertex_ok:
            violations.append(Violation(ViolationKind.NotAPath,
                                        f"path {idx} is a single vertex {p[0]}"))
            continue
        if len(set(p)) != len(p):
            rep = sorted(v for v, c in Counter(p).items() if c > 1)
            violations.append(Violation(ViolationKind.NotAPath,
                                        f"path {idx} repeats vertices {rep}"))
        for u, v in path_edges(p):
            if u == v or not g.has_edge(u, v):
                violations.append(Violation(ViolationKind.NonEdge,
                                            f"path {idx} uses ({u}, {v}) which is not an edge"))
                continue
            used[(u, v)] += 1
    for e, c in sorted(used.items()):
        if c > 1:
            violations.append(Violation(ViolationKind.DuplicateEdge,
                                        f"edge {e} covered {c} times"))
    for e in g.edges:
        if e not in used:
            violations.append(Violation(ViolationKind.UncoveredEdge, f"edge {e} is not covered"))
    return VerifyReport(valid=not violations, path_count=len(d.paths),
                        violations=tuple(violations))


class PathClass(str, enum.Enum):
    OddOdd = "odd-odd"
    OddEven = "odd-even"
    EvenEven = "even-even"


def classify_path(g: Graph, p: Sequence[int]) -> PathClass:
    if len(p) < 2:
        raise TrivialPath("classification needs a path with at least one edge")
    odd = g.is_odd(p[0]) + g.is_odd(p[-1])
    return (PathClass.EvenEven, PathClass.OddEven, PathClass.OddOdd)[odd]


def lower_bound(g: Graph) -> int:
    """max(n_o/2, ceil(Delta/2)); zero for an edgeless graph."""
    if g.m == 0:
        return 0
    prof = degree_profile(g)
    return max(prof.n_o // 2, (prof.max_degree + 1) // 2)


# ---------------------------------------------------------------------------
# JSON exchange format

def to_json(d: Decomposition, **dump_kwargs) -> str:
    doc = {
        "n": d.host.n,
        "edges": [list(e) for e in d.host.edges],
        "method": d.method,
        "paths": [list(p) for p in d.paths],
    }
    return json.dumps(doc, **dump_kwargs)


def from_json(text: str) -> Decomposition:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    missing = [k for k in ("n", "edges", "paths") if k not in doc]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")
    try:
        n = int(doc["n"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
        paths = [tuple(int(v) for v in p) for p in doc["paths"]]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed field: {exc}") from None
    method = str(doc.get("method", "manual"))
    # graph construction errors (self loops, bad endpoints) surface as ParseError too
    try:
        host = Graph(n, tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return Decomposition(host, tuple(paths), method)


def decomposition(host: Graph, paths: Iterable[Sequence[int]], method: str = "manual") -> Decomposition:
    return Decomposition(host, tuple(tuple(p) for p in paths), method)
