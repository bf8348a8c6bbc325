"""Grid drawings of realizations as 7-bit ASCII or SVG 1.1.

Label u sits in row floor(u / x) and column u mod x (plain), so x-edges are
vertical and 1-edges horizontal. In the slanted style rows hold y labels
and each row is shifted left by (x + y) / 2, so an x-edge leans left and a
y-edge leans right by the same amount. Horizontal positions are kept
doubled so half offsets stay integral.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Realization, type_cy_edges
from .transforms import growable_anchors

STYLES = ("plain", "slanted")
FORMATS = ("ascii", "svg")
_ANCHOR_LIMIT = 120


@dataclass(frozen=True)
class GridDiagram:
    v: int
    x: int
    y: int
    style: str
    path: tuple[int, ...]
    pos: dict[int, tuple[int, int]]
    marked: frozenset[frozenset[int]]
    anchors: tuple[int, ...]

    @property
    def rows(self) -> int:
        return 1 + max(r for _, r in self.pos.values())

    @property
    def width2(self) -> int:
        return max(c for c, _ in self.pos.values())


def layout(r, x: int, style: str = "plain", y: int | None = None) -> GridDiagram:
    """Place every label of ``r`` on the grid and compute the annotations."""
    if style not in STYLES:
        raise ValueError(f"style must be one of {STYLES}")
    path = tuple(r.path) if isinstance(r, Realization) else tuple(r)
    v = len(path)
    if x < 1:
        raise ValueError("x must be positive")
    if style == "slanted":
        if y is None or y <= x:
            raise ValueError("the slanted style needs y > x")
        width, shift2 = y, x + y
    else:
        width, shift2 = x, 2 * x
    pos = {}
    for u in path:
        row = u // width
        pos[u] = (2 * u - row * shift2, row)
    ann = y if y is not None else x
    edges = {frozenset((p, q)) for p, q in zip(path, path[1:])}
    marked = frozenset(frozenset(e) for e in type_cy_edges(v, ann) if frozenset(e) in edges)
    anchors: tuple[int, ...] = ()
    if 1 < v <= _ANCHOR_LIMIT and ann < v:
        anchors = tuple(growable_anchors(Realization(path), ann))
    return GridDiagram(v, x, ann, style, path, pos, marked, anchors)


def _ascii(d: GridDiagram) -> str:
    w = len(str(max(d.v - 1, 0)))
    unit = w + 2
    width = (d.width2 // 2 + 1) * 2 * unit + unit
    height = 2 * d.rows - 1
    canvas = [[" "] * width for _ in range(height)]

    def at(u: int) -> tuple[int, int]:
        col2, row = d.pos[u]
        return height - 1 - 2 * row, col2 * unit

    for u in d.path:
        line, col = at(u)
        text = str(u).rjust(w) + ("*" if u in d.anchors else "")
        for k, ch in enumerate(text):
            canvas[line][col + k] = ch
    far = []
    for p, q in zip(d.path, d.path[1:]):
        (lp, cp), (lq, cq) = at(p), at(q)
        mark = frozenset((p, q)) in d.marked
        if lp == lq and abs(cp - cq) == 2 * unit:
            lo = min(cp, cq)
            for k in range(lo + w + 1, lo + 2 * unit):
                canvas[lp][k] = "=" if mark else "-"
        elif abs(lp - lq) == 2:
            mid_line = (lp + lq) // 2
            mid_col = (cp + cq) // 2 + w - 1
            if mark:
                ch = "^"
            elif cp == cq:
                ch = "|"
            else:
                upper_col = cp if lp < lq else cq
                lower_col = cq if lp < lq else cp
                ch = "/" if upper_col > lower_col else "\\"
            old = canvas[mid_line][mid_col]
            if {old, ch} == {"/", "\\"}:
                ch = "X"
            canvas[mid_line][mid_col] = ch
        else:
            far.append(f"{p}-{q}:{abs(p - q)}")
    head = f"# v={d.v} x={d.x} y={d.y} style={d.style}"
    body = ["".join(row).rstrip() for row in canvas]
    out = [head] + body
    if far:
        out.append("# other edges: " + " ".join(far))
    if d.anchors:
        out.append("# growable anchors (*): " + " ".join(map(str, d.anchors)))
    return "\n".join(out) + "\n"


def _svg(d: GridDiagram) -> str:
    step, rise, pad = 18, 48, 24

    def xy(u: int) -> tuple[int, int]:
        col2, row = d.pos[u]
        return pad + col2 * step // 2, pad + (d.rows - 1 - row) * rise

    width = pad * 2 + d.width2 * step // 2
    height = pad * 2 + (d.rows - 1) * rise
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<defs><marker id="arrow" markerWidth="6" markerHeight="6" refX="5" refY="3" '
        'orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="black"/></marker></defs>',
    ]
    for p, q in zip(d.path, d.path[1:]):
        (x1, y1), (x2, y2) = xy(p), xy(q)
        if frozenset((p, q)) in d.marked:
            attrs = 'stroke="black" stroke-width="3" marker-end="url(#arrow)"'
        else:
            attrs = 'stroke="black" stroke-width="1"'
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {attrs}/>')
    for u in sorted(d.pos):
        cx, cy = xy(u)
        if u in d.anchors:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="8" fill="none" stroke="black"/>')
        out.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="black"/>')
        out.append(f'<text x="{cx}" y="{cy}" dx="4" dy="-5" font-size="9">{u}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_grid(r, x: int, style: str = "plain", fmt: str = "ascii", y: int | None = None) -> str:
    """Draw ``r`` relative to length ``x``; the output depends only on the arguments."""
    if fmt not in FORMATS:
        raise ValueError(f"fmt must be one of {FORMATS}")
    d = layout(r, x, style, y)
    return _ascii(d) if fmt == "ascii" else _svg(d)
