"""Static SVG drawings of chain covers of ``T_n``.

Column ``x`` runs left to right and row ``y`` bottom to top, so the
triangle's right angle sits in the lower left corner.  Each chain family
gets one colour from a fixed palette, assigned in sorted family order.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from linlay.layout import Layout
from linlay.triangle import Chain, edges_to_points

CELL = 18
MARGIN = 24
LEGEND_ROW = 16

PALETTE = (
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000",
    "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080", "#ffe119",
)


def _chains_of(layout: Layout) -> list[Chain]:
    m = layout.n - 1
    return [Chain(edges_to_points(p.edges, m), f"part {p.id}", (p.id,)) for p in layout.parts if len(p)]


def family_colours(chains: Sequence[Chain]) -> dict[str, str]:
    names = sorted({c.family for c in chains})
    return {name: PALETTE[i % len(PALETTE)] for i, name in enumerate(names)}


def render_triangle_svg(source: Sequence[Chain] | Layout, n: int | None = None, title: str | None = None) -> str:
    """Draw ``T_n`` with every cell filled in its chain's family colour.

    ``source`` is a list of chains on ``T_n`` or a queue layout of
    ``K_{n+1}`` (each part then counts as its own family).  Cells not covered
    stay white.
    """
    if isinstance(source, Layout):
        n = source.n - 1 if n is None else n
        chains = _chains_of(source)
    else:
        if n is None:
            raise ValueError("n is required when rendering chains")
        chains = list(source)
    n = max(n, 0)
    colours = family_colours(chains)
    fill: dict[tuple[int, int], str] = {}
    for c in chains:
        for x, y in c.points:
            fill[(int(x), int(y))] = colours[c.family]

    legend = sorted(colours)
    width = 2 * MARGIN + max(n, 1) * CELL
    grid_bottom = MARGIN + n * CELL
    height = grid_bottom + MARGIN + LEGEND_ROW * len(legend) + (LEGEND_ROW if title else 0)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g font-family="sans-serif" font-size="10">',
    ]
    if title:
        out.append(f'<text x="{MARGIN}" y="{MARGIN - 8}" font-size="12">{escape(title)}</text>')
    out.append('<g stroke="#444" stroke-width="0.5">')
    for x in range(1, n + 1):
        for y in range(1, n + 2 - x):
            px = MARGIN + (x - 1) * CELL
            py = grid_bottom - y * CELL
            colour = fill.get((x, y), "#ffffff")
            out.append(f'<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="{colour}"/>')
    out.append("</g>")
    for i, name in enumerate(legend):
        ly = grid_bottom + MARGIN // 2 + i * LEGEND_ROW
        out.append(
            f'<rect x="{MARGIN}" y="{ly}" width="10" height="10" fill="{colours[name]}" stroke="#444" stroke-width="0.5"/>'
        )
        out.append(f'<text x="{MARGIN + 16}" y="{ly + 9}">{escape(name)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
