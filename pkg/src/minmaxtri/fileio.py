"""File formats: point-set text, triangulation/instance JSON, traces,
verification reports.

Floats are written with 17 significant digits so every double round-trips
exactly, and all emitters are deterministic (sorted keys, fixed layout).
"""

import json
from typing import Iterable, Mapping, Sequence

from .triangulation import PointSet, Triangulation


def fmt_float(x: float) -> str:
    return f"{float(x):.17g}"


def points_to_text(points: Iterable) -> str:
    lines = [f"{fmt_float(p[0])} {fmt_float(p[1])}" for p in points]
    return "\n".join(lines) + "\n"


def points_from_text(text: str) -> PointSet:
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'x y', got {raw!r}")
        pts.append((float(parts[0]), float(parts[1])))
    return PointSet(pts)


def _json_points(points: Iterable) -> str:
    inner = ", ".join(f"[{fmt_float(p[0])}, {fmt_float(p[1])}]" for p in points)
    return f"[{inner}]"


def _json_triangles(triangles: Iterable[Sequence[int]]) -> str:
    inner = ", ".join(f"[{i}, {j}, {k}]" for (i, j, k) in triangles)
    return f"[{inner}]"


def triangulation_to_json(t: Triangulation, labels: Mapping[str, int] | None = None) -> str:
    parts = [
        f'"points": {_json_points(t.point_set.points)}',
        f'"triangles": {_json_triangles(t.triangles)}',
    ]
    if labels is not None:
        lab = ", ".join(f'"{k}": {labels[k]}' for k in sorted(labels))
        parts.append(f'"labels": {{{lab}}}')
    return "{" + ", ".join(parts) + "}\n"


def triangulation_from_json(text: str) -> tuple[Triangulation, dict[str, int] | None]:
    data = json.loads(text)
    ps = PointSet([(float(x), float(y)) for x, y in data["points"]])
    tri = Triangulation(ps, [tuple(t) for t in data["triangles"]])
    labels = data.get("labels")
    if labels is not None:
        labels = {str(k): int(v) for k, v in labels.items()}
    return tri, labels


def trace_to_json(trace: Iterable) -> str:
    rows = []
    for entry in trace:
        rows.append(
            "{"
            + f'"insert": [{entry.u}, {entry.v}], '
            + f'"crossings": {entry.crossings}, '
            + f'"measure_before": {fmt_float(entry.measure_before)}, '
            + f'"measure_after": {fmt_float(entry.measure_after)}'
            + "}"
        )
    return "[" + ", ".join(rows) + "]\n"
