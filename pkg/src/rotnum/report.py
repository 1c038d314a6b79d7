"""Render ziggurat grids as heatmap figures.

Figures are a reporting surface only: the exact pipeline (CSV and PGM)
never touches floating point, while matplotlib necessarily works in
floats.  The Agg backend is forced so rendering works headless.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidArgument, ParseError
from .rationals import format_fraction


def render_heatmap(
    axis: tuple[Fraction, ...],
    values: tuple[Fraction, ...],
    out_path: str,
    title: str = "R(s, t)",
) -> None:
    """Draw the stairstep surface of a two-letter grid as a PNG heatmap.

    ``values`` is in lexicographic (s-major) order, one per (s, t) pair.
    Each grid point colors the cell it dominates, which matches the
    stairstep structure of the extremal function.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    n = len(axis)
    if n * n != len(values):
        raise InvalidArgument("heatmaps require a full two-letter grid")
    edges = [float(a) for a in axis] + [1.0]
    # rows indexed by t, columns by s
    matrix = [
        [float(values[s_index * n + t_index]) for s_index in range(n)]
        for t_index in range(n)
    ]
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    mesh = ax.pcolormesh(edges, edges, matrix, cmap="viridis", shading="flat")
    fig.colorbar(mesh, ax=ax, label="R")
    ticks = [float(a) for a in axis]
    labels = [format_fraction(a) for a in axis]
    ax.set_xticks(ticks, labels=labels, rotation=45, fontsize=7)
    ax.set_yticks(ticks, labels=labels, fontsize=7)
    ax.set_xlabel("s")
    ax.set_ylabel("t")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def read_pgm(stream) -> tuple[int, int, list[list[int]]]:
    """Parse a binary P5 heightmap into rows of byte values."""
    magic = stream.readline().strip()
    if magic != b"P5":
        raise ParseError("not a binary P5 heightmap")
    fields = []
    while len(fields) < 3:
        line = stream.readline()
        if not line:
            raise ParseError("truncated heightmap header")
        fields.extend(line.split())
    width, height, maxval = (int(f) for f in fields[:3])
    if maxval != 255:
        raise ParseError("only 8-bit heightmaps are supported")
    data = stream.read(width * height)
    if len(data) != width * height:
        raise ParseError("truncated heightmap data")
    return width, height, [
        list(data[row * width:(row + 1) * width]) for row in range(height)
    ]


def render_pgm_png(in_path: str, out_path: str, title: str = "R(s, t)") -> None:
    """Grayscale preview of an exported heightmap (t runs top to bottom)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with open(in_path, "rb") as stream:
        width, height, rows = read_pgm(stream)
    fig, ax = plt.subplots(figsize=(5.0, 4.5))
    image = ax.imshow(
        rows, cmap="gray", vmin=0, vmax=255, origin="upper",
        extent=(0.0, 1.0, 1.0, 0.0), interpolation="nearest",
    )
    fig.colorbar(image, ax=ax, label="quantized R")
    ax.set_xlabel("s")
    ax.set_ylabel("t")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
