"""SVG rendering of triangulations: edges, optional vertex labels, optional
highlight of an insertion segment with its crossed edges dashed and the two
channel regions shaded."""

from typing import Mapping, Optional, Sequence

from .errors import MinMaxTriError
from .insertion import extract_channel
from .kernels import segments_cross as _segs_cross
from .triangulation import Triangulation

_WIDTH = 800.0
_PAD = 0.05


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def render_svg(
    t: Triangulation,
    highlight: Optional[tuple[int, int]] = None,
    labels: Optional[Mapping[str, int]] = None,
    show_labels: bool = False,
    shade_channel: bool = False,
) -> str:
    pts = t.point_set.points
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    spanx = maxx - minx or 1.0
    spany = maxy - miny or 1.0
    pad = _PAD * max(spanx, spany)
    minx, maxx = minx - pad, maxx + pad
    miny, maxy = miny - pad, maxy + pad
    scale = _WIDTH / (maxx - minx)
    height = (maxy - miny) * scale

    def sx(x: float) -> float:
        return (x - minx) * scale

    def sy(y: float) -> float:
        return height - (y - miny) * scale  # y up

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(_WIDTH)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(_WIDTH)} {_fmt(height)}">',
    ]

    crossed: set[tuple[int, int]] = set()
    if highlight is not None:
        u, v = highlight
        pu, pv = pts[u], pts[v]
        for a, b in t.edges:
            if a in (u, v) or b in (u, v):
                continue
            pa, pb = pts[a], pts[b]
            if _segs_cross(pu.x, pu.y, pv.x, pv.y, pa.x, pa.y, pb.x, pb.y):
                crossed.add((a, b))
        if shade_channel and crossed:
            try:
                channel = extract_channel(t, u, v)
                for poly, fill in ((channel.left, "#dddddd"), (channel.right, "#aaaaaa")):
                    coords = " ".join(
                        f"{_fmt(sx(p.x))},{_fmt(sy(p.y))}" for p in poly.pts
                    )
                    out.append(f'<polygon points="{coords}" fill="{fill}" stroke="none"/>')
            except MinMaxTriError:
                pass

    for a, b in t.edges:
        pa, pb = pts[a], pts[b]
        dashed = (a, b) in crossed
        style = (
            'stroke="#555555" stroke-width="1.2" stroke-dasharray="6,4"'
            if dashed
            else 'stroke="#222222" stroke-width="1.2"'
        )
        out.append(
            f'<line x1="{_fmt(sx(pa.x))}" y1="{_fmt(sy(pa.y))}" '
            f'x2="{_fmt(sx(pb.x))}" y2="{_fmt(sy(pb.y))}" {style}/>'
        )

    if highlight is not None:
        u, v = highlight
        pu, pv = pts[u], pts[v]
        out.append(
            f'<line x1="{_fmt(sx(pu.x))}" y1="{_fmt(sy(pu.y))}" '
            f'x2="{_fmt(sx(pv.x))}" y2="{_fmt(sy(pv.y))}" '
            'stroke="#cc0000" stroke-width="3"/>'
        )

    for i, p in enumerate(pts):
        out.append(
            f'<circle cx="{_fmt(sx(p.x))}" cy="{_fmt(sy(p.y))}" r="3" fill="#000000"/>'
        )

    if show_labels:
        names = {}
        if labels:
            names = {v: k for k, v in labels.items()}
        for i, p in enumerate(pts):
            text = names.get(i, str(i))
            out.append(
                f'<text x="{_fmt(sx(p.x) + 5)}" y="{_fmt(sy(p.y) - 5)}" '
                f'font-size="14" font-family="sans-serif">{text}</text>'
            )

    out.append("</svg>")
    return "\n".join(out) + "\n"
