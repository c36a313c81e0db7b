"""Serializers: JSON documents, DOT graphs, and SVG path plots.

All emitters are deterministic: vertex orders are canonical, JSON keys are
written in a fixed order, and floating point output is formatted with a
fixed precision.  SVG rendering is only defined for rank 3, where the three
coordinate directions project onto the plane at 60, 180 and 300 degrees.
"""

from __future__ import annotations

import json

from .errors import SvgRankUnsupported
from .affine import crossing_sets
from .galleries import Gallery, format_gallery, path_vertices
from .graphs import CrystalGraph, Decomposition
from .mv import MVLabel, SurjectivityReport


def to_json(document) -> str:
    return json.dumps(document, indent=2)


def graph_document(graph: CrystalGraph) -> dict:
    vertices = graph.sorted_vertices()
    index = {g: k for k, g in enumerate(vertices)}
    edges = [
        {"from": index[u], "to": index[v], "i": i}
        for u, v, i in sorted(graph.edges, key=lambda edge: (index[edge[0]], edge[2]))
    ]
    return {
        "rank": graph.rank,
        "vertices": [format_gallery(g) for g in vertices],
        "edges": edges,
    }


def graph_dot(graph: CrystalGraph) -> str:
    vertices = graph.sorted_vertices()
    index = {g: k for k, g in enumerate(vertices)}
    lines = ["digraph crystal {"]
    for k, g in enumerate(vertices):
        label = format_gallery(g) or "empty"
        lines.append(f'  v{k} [label="{label}"];')
    for u, v, i in sorted(graph.edges, key=lambda edge: (index[edge[0]], edge[2])):
        lines.append(f'  v{index[u]} -> v{index[v]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def label_document(label: MVLabel) -> dict:
    return {
        "lambda": list(label.lam.coeffs),
        "tableau": format_gallery(label.tableau),
        "mu": list(label.mu.counts),
    }


def decomposition_document(decomposition: Decomposition) -> dict:
    return {
        "rank": decomposition.rank,
        "shape": list(decomposition.shape),
        "total_galleries": decomposition.total,
        "entries": [
            {
                "lambda": list(entry.lam.coeffs),
                "multiplicity": entry.multiplicity,
                "representatives": [format_gallery(g) for g in entry.representatives],
            }
            for entry in decomposition.entries
        ],
    }


def crossings_document(gallery: Gallery) -> list:
    return [
        {
            "segment": k,
            "roots": [{"a": r.a, "b": r.b, "m": r.level} for r in segment],
        }
        for k, segment in enumerate(crossing_sets(gallery))
    ]


def surjectivity_document(report: SurjectivityReport) -> dict:
    return {
        "ok": report.ok,
        "rank": report.rank,
        "shape": list(report.shape),
        "labels_checked": report.labels_checked,
        "misses": [
            {"lambda": list(lam.coeffs), "tableau": format_gallery(tab)}
            for lam, tab in report.misses
        ],
    }


def path_document(gallery: Gallery) -> dict:
    return {
        "rank": gallery.rank,
        "vertices": [list(v) for v in path_vertices(gallery)],
    }


# Plane projection for rank 3: unit hexagonal directions.
_DIRECTIONS = (
    (0.5, 0.8660254037844386),  # epsilon_1 at 60 degrees
    (-1.0, 0.0),  # epsilon_2 at 180 degrees
    (0.5, -0.8660254037844386),  # epsilon_3 at 300 degrees
)


def _project(point: tuple[int, ...]) -> tuple[float, float]:
    x = sum(c * d[0] for c, d in zip(point, _DIRECTIONS))
    y = sum(c * d[1] for c, d in zip(point, _DIRECTIONS))
    return x, y


def path_svg(gallery: Gallery, scale: float = 60.0) -> str:
    """SVG plot of the gallery path with the dominant chamber shaded (rank 3)."""
    if gallery.rank != 3:
        raise SvgRankUnsupported(f"SVG plots are defined for rank 3, not {gallery.rank}")
    points = [_project(v) for v in path_vertices(gallery)]
    reach = max(max(abs(x), abs(y)) for x, y in points)
    reach = max(reach + 1.0, 2.0)
    size = 2 * reach * scale
    half = size / 2

    def at(p: tuple[float, float]) -> str:
        # SVG y axis points down.
        return f"{half + scale * p[0]:.2f},{half - scale * p[1]:.2f}"

    omega1 = (0.5 * reach * 2, 0.8660254037844386 * reach * 2)
    omega2 = (-0.5 * reach * 2, 0.8660254037844386 * reach * 2)
    chamber = " ".join([at((0.0, 0.0)), at(omega1), at(omega2)])
    polyline = " ".join(at(p) for p in points)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.2f} {size:.2f}">',
        f'  <polygon points="{chamber}" fill="#d0d0d0" fill-opacity="0.6" stroke="none"/>',
    ]
    for direction in _DIRECTIONS:
        tip = (direction[0] * reach * 2, direction[1] * reach * 2)
        lines.append(
            f'  <line x1="{half:.2f}" y1="{half:.2f}" '
            f'x2="{at(tip).split(",")[0]}" y2="{at(tip).split(",")[1]}" '
            f'stroke="#bbbbbb" stroke-dasharray="4 4"/>'
        )
    lines.append(
        f'  <polyline points="{polyline}" fill="none" stroke="#c02020" stroke-width="3"/>'
    )
    lines.append(f'  <circle cx="{half:.2f}" cy="{half:.2f}" r="4" fill="#000000"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
