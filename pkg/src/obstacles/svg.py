"""Deterministic SVG rendering of drawings, scenes, arrangements and gadgets.

The viewBox is the exact bounding box of everything drawn plus a 5%
margin on each side.  The y axis points up (coordinates are negated).
Element classes: ``vertex``, ``edge``, ``nonedge``, ``obstacle``,
``container``, ``face`` and ``face chosen``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from xml.sax.saxutils import quoteattr

from .arrangement import Arrangement, Drawing

STYLE = """
.vertex { fill: #222; }
.edge { stroke: #333; stroke-width: 1; fill: none; vector-effect: non-scaling-stroke; }
.nonedge { stroke: #999; stroke-dasharray: 4 3; stroke-width: 1; fill: none; vector-effect: non-scaling-stroke; }
.obstacle { fill: #c0504d; fill-opacity: 0.6; stroke: #7a1f1d; vector-effect: non-scaling-stroke; }
.container { fill: #eef3fb; stroke: #3465a4; vector-effect: non-scaling-stroke; }
.face { fill: #ddd; fill-opacity: 0.35; fill-rule: evenodd; stroke: none; }
.face.chosen { fill: #f5c242; fill-opacity: 0.8; }
""".strip()


def _num(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    text = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _xy(p) -> str:
    return f"{_num(p[0])},{_num(-Fraction(p[1]))}"


class _Canvas:
    def __init__(self):
        self.items = []
        self.points = []

    def add(self, tag: str, attrs: dict, pts=()):
        self.points.extend(pts)
        body = " ".join(f"{k}={quoteattr(str(v))}" for k, v in attrs.items())
        self.items.append(f"<{tag} {body}/>")

    def polygon(self, ring, cls):
        ring = list(ring)
        self.add("polygon", {"class": cls, "points": " ".join(_xy(p) for p in ring)}, ring)

    def path(self, rings, cls):
        d = " ".join("M " + " L ".join(_xy(p) for p in ring) + " Z" for ring in rings)
        self.add("path", {"class": cls, "d": d}, [p for ring in rings for p in ring])

    def line(self, a, b, cls):
        self.add("line", {"class": cls, "x1": _num(a[0]), "y1": _num(-Fraction(a[1])),
                          "x2": _num(b[0]), "y2": _num(-Fraction(b[1]))}, [a, b])

    def vertex(self, p, r, label):
        self.add("circle", {"class": "vertex", "cx": _num(p[0]), "cy": _num(-Fraction(p[1])),
                            "r": _num(r), "data-label": label}, [p])

    def render(self) -> str:
        if self.points:
            xs = [Fraction(p[0]) for p in self.points]
            ys = [-Fraction(p[1]) for p in self.points]
            x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        else:
            x0 = y0 = Fraction(0)
            x1 = y1 = Fraction(1)
        w = max(x1 - x0, Fraction(1, 1000))
        h = max(y1 - y0, Fraction(1, 1000))
        mx, my = w / 20, h / 20
        box = f"{_num(x0 - mx)} {_num(y0 - my)} {_num(w + 2 * mx)} {_num(h + 2 * my)}"
        head = ('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'viewBox="{box}">')
        return "\n".join([head, f"<style>{STYLE}</style>"] + self.items + ["</svg>"]) + "\n"


def _radius(points) -> Fraction:
    pts = list(points)
    if len(pts) < 2:
        return Fraction(1, 10)
    xs = [Fraction(p[0]) for p in pts]
    ys = [Fraction(p[1]) for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    return max(span / 150, Fraction(1, 1000))


def _draw_points(c: _Canvas, pos: dict, graph=None, nonedges=False):
    if graph is not None:
        for u, v in graph.sorted_edges():
            c.line(pos[u], pos[v], "edge")
        if nonedges:
            for u, v in graph.nonedges():
                c.line(pos[u], pos[v], "nonedge")
    r = _radius(pos.values())
    for v in sorted(pos):
        c.vertex(pos[v], r, v)


def _face_rings(arr: Arrangement, face, frame):
    f = arr.faces[face]
    rings = []
    if f.bounded:
        rings.append([arr.nodes[i] for i in f.outer])
    else:
        rings.append(frame)
    for hole in f.holes:
        ring = [arr.nodes[i] for i in hole]
        if len(ring) >= 2:
            rings.append(ring)
    return rings


def emit_svg(value, style: dict = None) -> str:
    """SVG text for a Drawing, Scene, Arrangement or gadget output.

    ``style`` keys: ``nonedges`` (bool) dashes the non-edges of a drawing
    or scene graph; ``chosen`` (face indices) highlights faces of an
    arrangement; ``graph`` supplies edges for a scene without them.
    """
    from .hardness import GadgetOutput, Placement
    from .visibility import Scene

    style = dict(style or {})
    c = _Canvas()
    if isinstance(value, Arrangement):
        chosen = set(style.get("chosen", ()))
        xs = [p.x for p in value.nodes]
        ys = [p.y for p in value.nodes]
        pad = max(max(xs) - min(xs), max(ys) - min(ys), 1) / 10
        frame = [(min(xs) - pad, min(ys) - pad), (max(xs) + pad, min(ys) - pad),
                 (max(xs) + pad, max(ys) + pad), (min(xs) - pad, max(ys) + pad)]
        for f in value.faces:
            cls = "face chosen" if f.index in chosen else "face"
            c.path(_face_rings(value, f.index, frame), cls)
        for k in range(value.num_arcs):
            a, b = value.arc_segment(k)
            c.line(a, b, "edge")
        drawing = getattr(value, "drawing", None)
        if drawing is not None:
            _draw_points(c, dict(drawing.position))
    elif isinstance(value, Drawing):
        _draw_points(c, dict(value.position), value.graph, style.get("nonedges", False))
    elif isinstance(value, Scene):
        if value.container is not None:
            c.polygon(value.container.vertices, "container")
        for poly in value.obstacles:
            c.polygon(poly.vertices, "obstacle")
        graph = style.get("graph", value.graph)
        _draw_points(c, dict(value.points), graph, style.get("nonedges", False))
    elif isinstance(value, Placement):
        c.polygon(value.gadget.polygon.vertices, "container")
        _draw_points(c, dict(value.positions), value.gadget.graph)
    elif isinstance(value, GadgetOutput):
        c.polygon(value.polygon.vertices, "container")
        r = Fraction(1, 8)
        for p in itertools.chain.from_iterable(value.bay_centers):
            c.add("circle", {"class": "bay", "cx": _num(p.x), "cy": _num(-p.y), "r": _num(r)}, [p])
    else:
        raise TypeError(f"cannot render {type(value).__name__}")
    return c.render()
