"""SVG drawings of chord diagrams, chords stroked by colour."""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .chords import ChordDiagram
from .errors import UsageError
from .oracle import colors_used

# 15 saturated + 15 light tones, one per colour of the two palettes
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173",
    "#aec7e8", "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5",
    "#c49c94", "#f7b6d2", "#c7c7c7", "#dbdb8d", "#9edae5",
    "#6b6ecf", "#b5cf6b", "#e7ba52", "#d6616b", "#ce6dbd",
)
UNCOLORED = "#000000"


def render_svg(diagram: ChordDiagram, coloring: dict[int, int] | None = None, size: int = 480) -> str:
    if coloring is not None:
        if set(coloring) != set(diagram.ids):
            raise UsageError("coloring does not match the diagram's chords")
        bad = [c for c in coloring.values() if not 0 <= c < len(PALETTE)]
        if bad:
            raise UsageError(f"colours {sorted(set(bad))} fall outside the {len(PALETTE)}-colour palette")

    legend_h = 24 if coloring is None else 24 + 16 * ((colors_used(coloring) + 9) // 10)
    cx = cy = size / 2
    r = size / 2 - 24
    m = max(diagram.num_slots, 1)

    def point(slot: int) -> tuple[float, float]:
        theta = -math.pi / 2 + 2 * math.pi * slot / m
        return cx + r * math.cos(theta), cy + r * math.sin(theta)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size + legend_h}" '
        f'viewBox="0 0 {size} {size + legend_h}">',
        f'<rect x="0" y="0" width="{size}" height="{size + legend_h}" fill="#ffffff"/>',
        f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r:.2f}" fill="none" stroke="#444444" stroke-width="1.5"/>',
        '<g id="chords" stroke-width="2" stroke-linecap="round">',
    ]
    for cid in diagram.ids:
        a, b = diagram.ends(cid)
        (x1, y1), (x2, y2) = point(a), point(b)
        stroke = UNCOLORED if coloring is None else PALETTE[coloring[cid]]
        title = f"chord {cid}" + ("" if coloring is None else f", colour {coloring[cid]}")
        out.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="{stroke}">'
            f"<title>{escape(title)}</title></line>"
        )
    out.append("</g>")
    out.append('<g id="slots" fill="#444444">')
    for slot in diagram.slots:
        x, y = point(slot)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5"/>')
    out.append("</g>")

    out.append(f'<g id="legend" font-family="sans-serif" font-size="12" transform="translate(8,{size + 4})">')
    if coloring is None:
        out.append(f'<text x="0" y="12">chords: {diagram.n}</text>')
    else:
        out.append(f'<text x="0" y="12">colors_used: {colors_used(coloring)}</text>')
        for k, c in enumerate(sorted(set(coloring.values()))):
            x, y = 46 * (k % 10), 20 + 16 * (k // 10)
            out.append(f'<rect x="{x}" y="{y}" width="12" height="12" fill="{PALETTE[c]}"/>')
            out.append(f'<text x="{x + 15}" y="{y + 10}">{c}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
