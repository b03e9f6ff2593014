"""Graphviz DOT rendering of a decomposition, one colour per path."""

from __future__ import annotations

from .decomposition import Decomposition, path_edges


def palette(k: int) -> list[str]:
    """``k`` distinct HSV colours spaced evenly around the hue circle."""
    return [f"{i / k:.4f} 0.800 0.850" for i in range(k)]


def to_dot(d: Decomposition, name: str = "decomposition") -> str:
    g = d.host
    colours = palette(len(d.paths))
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in range(g.n):
        label = f"{g.labels[v][0]},{g.labels[v][1]}" if g.labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for idx, p in enumerate(d.paths):
        for u, v in path_edges(p):
            lines.append(f'  {u} -- {v} [color="{colours[idx]}", penwidth=2, path={idx}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
