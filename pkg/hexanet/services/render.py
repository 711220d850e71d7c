"""
SVG pictures of tilings and labeled networks.

Vertex S sits at the sum of the edge vectors e_m, m in S, with
e_m = (cos(pi(m-1)/n), sin(pi(m-1)/n)). Coordinates are floats only here.
"""
import io
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from .networks import Network  # noqa: E402
from .scalars import format_scalar  # noqa: E402
from .tilings import Subset, Tiling, format_subset  # noqa: E402

logger = logging.getLogger(__name__)

Point = Tuple[float, float]

SVG_RC = {
    "svg.hashsalt": "hexanet",
    "svg.fonttype": "none",
    "font.size": 8,
}


@dataclass(frozen=True)
class Layout:
    rhombi: List[Tuple[Point, Point, Point, Point]]
    vertex_labels: Dict[Point, str]
    face_labels: Dict[Point, str]


def edge_vector(n: int, m: int) -> Point:
    angle = math.pi * (m - 1) / n
    return (math.cos(angle), math.sin(angle))


def position(n: int, s: Subset) -> Point:
    x = sum(edge_vector(n, m)[0] for m in s)
    y = sum(edge_vector(n, m)[1] for m in s)
    return (round(x, 9), round(y, 9))


def layout(obj: Union[Tiling, Network]) -> Layout:
    """Rhombus corners and label anchors; network values replace subset names"""
    tiling = obj.tiling if isinstance(obj, Network) else obj
    n = tiling.n
    rhombi = []
    face_labels = {}
    for tile in tiling.tiles:
        corners = tuple(position(n, v) for v in tile.vertices())
        rhombi.append(corners)
        center = (
            round(sum(p[0] for p in corners) / 4, 9),
            round(sum(p[1] for p in corners) / 4, 9),
        )
        if isinstance(obj, Network):
            face_labels[center] = format_scalar(obj.face(tile.i, tile.j))
        else:
            face_labels[center] = f"R{tile.i}{tile.j}"
    vertex_labels = {}
    for v in tiling.vertices():
        text = format_scalar(obj.vertex(v)) if isinstance(obj, Network) else format_subset(v)
        vertex_labels[position(n, v)] = text
    return Layout(rhombi, vertex_labels, face_labels)


def _short(text: str) -> str:
    # "p/1" reads better as "p" on a picture
    return text[:-2] if text.endswith("/1") and "/" not in text[:-2] and " " not in text else text


def render_svg(obj: Union[Tiling, Network], labels: bool = True) -> str:
    """The SVG document as text; identical input gives identical bytes"""
    shape = layout(obj)
    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(6, 6))
        try:
            for corners in shape.rhombi:
                ax.add_patch(Polygon(corners, closed=True, facecolor="#e8eef7", edgecolor="#1f3b66", linewidth=1))
            if labels:
                for (x, y), text in sorted(shape.vertex_labels.items()):
                    ax.annotate(_short(text), (x, y), ha="center", va="center", color="#8b1a1a")
                for (x, y), text in sorted(shape.face_labels.items()):
                    ax.annotate(_short(text), (x, y), ha="center", va="center", color="#1f3b66")
            points = list(shape.vertex_labels)
            xs, ys = [p[0] for p in points], [p[1] for p in points]
            ax.set_xlim(min(xs) - 0.5, max(xs) + 0.5)
            ax.set_ylim(min(ys) - 0.5, max(ys) + 0.5)
            ax.set_aspect("equal")
            ax.axis("off")
            buffer = io.StringIO()
            fig.savefig(buffer, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    logger.debug(f"Rendered {len(shape.rhombi)} rhombi and {len(shape.vertex_labels)} vertices")
    return buffer.getvalue()
