"""Grid-state rendering: matplotlib figures (SVG files by default) and a
lossy ASCII view for quick terminal debugging."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.collections import LineCollection

from . import hexgrid
from .hexgrid import Vertex

SQRT3_2 = math.sqrt(3) / 2

BURNING_COLOR = "#d62728"
PROTECTED_COLOR = "#000000"
UNBURNED_COLOR = "#b8b8b8"
EDGE_COLOR = "#dddddd"

FORMATS = ("svg", "ascii")


@dataclass(frozen=True)
class RenderWindow:
    """Inclusive coordinate bounds of the rendered region."""

    i_min: int
    i_max: int
    j_min: int
    j_max: int
    format: str = "svg"

    def __post_init__(self):
        if self.i_min > self.i_max or self.j_min > self.j_max:
            raise ValueError("window bounds must satisfy i_min <= i_max, j_min <= j_max")
        if self.format not in FORMATS:
            raise ValueError(f"unknown render format {self.format!r}")

    @classmethod
    def parse(cls, text: str, format: str = "svg") -> "RenderWindow":
        parts = text.split(":")
        if len(parts) != 4:
            raise ValueError("window must look like i_min:i_max:j_min:j_max")
        return cls(*(int(p) for p in parts), format=format)

    def __contains__(self, v: Vertex) -> bool:
        return self.i_min <= v[0] <= self.i_max and self.j_min <= v[1] <= self.j_max

    def vertices(self):
        for i in range(self.i_min, self.i_max + 1):
            for j in range(self.j_min, self.j_max + 1):
                if hexgrid.is_vertex(i, j):
                    yield (i, j)


def to_xy(v: Vertex) -> tuple[float, float]:
    return (v[0] * SQRT3_2, v[1] / 2)


def render_figure(state, window: RenderWindow, scale: float = 12.0, highlight=()):
    """Draw one process state: burning red, protected black, other grid
    vertices gray, highlighted vertices ringed.  ``scale`` is pixels per
    unit edge length."""
    verts = list(window.vertices())
    vert_set = set(verts)
    segments = []
    for v in verts:
        for w in hexgrid.neighbor_tuple(v):
            if w in vert_set and v < w:
                segments.append((to_xy(v), to_xy(w)))
    width_units = (window.i_max - window.i_min) * SQRT3_2 + 1
    height_units = (window.j_max - window.j_min) / 2 + 1
    fig, ax = plt.subplots(figsize=(width_units * scale / 72, height_units * scale / 72))
    ax.add_collection(LineCollection(segments, colors=EDGE_COLOR, linewidths=0.6, zorder=1))
    by_color = {BURNING_COLOR: [], PROTECTED_COLOR: [], UNBURNED_COLOR: []}
    for v in verts:
        if v in state.burning:
            by_color[BURNING_COLOR].append(v)
        elif v in state.protected:
            by_color[PROTECTED_COLOR].append(v)
        else:
            by_color[UNBURNED_COLOR].append(v)
    for color, group in by_color.items():
        if group:
            xs, ys = zip(*(to_xy(v) for v in group))
            ax.scatter(xs, ys, s=(scale * 0.45) ** 2, c=color, zorder=2, linewidths=0)
    for v in highlight:
        if v in window:
            x, y = to_xy(v)
            ax.scatter([x], [y], s=(scale * 1.2) ** 2, facecolors="none",
                       edgecolors="black", linewidths=0.8, zorder=3)
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_xlim(window.i_min * SQRT3_2 - 0.6, window.i_max * SQRT3_2 + 0.6)
    ax.set_ylim(window.j_min / 2 - 0.6, window.j_max / 2 + 0.6)
    ax.set_title(f"turn {state.turn}", fontsize=8)
    return fig


def save_frame(state, window: RenderWindow, path, scale: float = 12.0, highlight=()):
    fig = render_figure(state, window, scale=scale, highlight=highlight)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


ASCII_CHARS = {"burning": "#", "protected": "O", "unburned": ".", "empty": " ",
               "highlight": "@"}


def render_ascii(state, window: RenderWindow, highlight=()) -> str:
    """Character grid, one row per j (top first), one column per i.  The
    hex geometry gets squashed, so this is a debug aid only."""
    hl = set(highlight)
    rows = []
    for j in range(window.j_max, window.j_min - 1, -1):
        row = []
        for i in range(window.i_min, window.i_max + 1):
            v = (i, j)
            if not hexgrid.is_vertex(i, j):
                row.append(ASCII_CHARS["empty"])
            elif v in hl:
                row.append(ASCII_CHARS["highlight"])
            elif v in state.burning:
                row.append(ASCII_CHARS["burning"])
            elif v in state.protected:
                row.append(ASCII_CHARS["protected"])
            else:
                row.append(ASCII_CHARS["unburned"])
        rows.append("".join(row).rstrip())
    return "\n".join(rows)


def render_trace(trace, window: RenderWindow, out_dir, scale: float = 12.0,
                 highlight=(), stem: str = "turn") -> list[Path]:
    """Write one frame per state in the trace; returns the written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for state in trace:
        if window.format == "ascii":
            path = out / f"{stem}{state.turn:04d}.txt"
            path.write_text(render_ascii(state, window, highlight=highlight) + "\n")
        else:
            path = out / f"{stem}{state.turn:04d}.svg"
            save_frame(state, window, path, scale=scale, highlight=highlight)
        paths.append(path)
    return paths
