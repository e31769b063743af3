"""Line-oriented text formats for graphs, drawings, scenes and polygons.

Grammar (blank lines and ``#`` comments are ignored)::

    graph <n> <m>            then m lines   e <u> <v>      (0-based, u < v)
    drawing <n> <m>          then n lines   v <id> <x> <y>
                             then m lines   e <u> <v>
    scene: a drawing block, then any number of
        obstacle <k>         then k lines   <x> <y>
      and optionally one
        container <k>        then k lines   <x> <y>
    polygon <k>              then k lines   <x> <y>

Scalars are integers or reduced fractions ``p/q``.
"""

from __future__ import annotations

import re

from .arrangement import Drawing
from .geometry import Polygon, format_scalar, point, scalar
from .graph import Graph
from .visibility import Scene

_SCALAR = re.compile(r"^-?\d+(/\d+)?$")
_INT = re.compile(r"^-?\d+$")


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is None:
            where = "input"
        elif column is None:
            where = f"line {line}"
        else:
            where = f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


class _Lines:
    """Tokenized non-blank lines with their source positions."""

    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            tokens = []
            for m in re.finditer(r"\S+", body):
                tokens.append((m.group(), m.start() + 1))
            if tokens:
                self.items.append((no, tokens))
        self.pos = 0

    def done(self) -> bool:
        return self.pos >= len(self.items)

    def peek_keyword(self):
        return None if self.done() else self.items[self.pos][1][0][0]

    def take(self, keyword, arity):
        if self.done():
            last = self.items[-1][0] if self.items else None
            raise ParseError(f"expected '{keyword}' line, found end of input", last)
        no, tokens = self.items[self.pos]
        self.pos += 1
        word, col = tokens[0]
        if keyword is not None and word != keyword:
            raise ParseError(f"expected '{keyword}', found '{word}'", no, col)
        args = tokens[1:] if keyword is not None else tokens
        if len(args) != arity:
            raise ParseError(f"'{keyword or 'coordinate'}' line needs {arity} values, got {len(args)}", no, col)
        return no, args


def _int(tok, no) -> int:
    text, col = tok
    if not _INT.match(text):
        raise ParseError(f"expected an integer, found '{text}'", no, col)
    return int(text)


def _count(tok, no) -> int:
    value = _int(tok, no)
    if value < 0:
        raise ParseError("count must be non-negative", no, tok[1])
    return value


def _scalar(tok, no):
    text, col = tok
    if not _SCALAR.match(text):
        raise ParseError(f"expected a rational like 3 or -7/2, found '{text}'", no, col)
    try:
        return scalar(text)
    except ZeroDivisionError:
        raise ParseError("zero denominator", no, col) from None


def _edges(lines: _Lines, m: int, n_labels: set, ordered: bool):
    edges = []
    for _ in range(m):
        no, (a, b) = lines.take("e", 2)
        u, v = _int(a, no), _int(b, no)
        for val, tok in ((u, a), (v, b)):
            if val not in n_labels:
                raise ParseError(f"unknown vertex {val}", no, tok[1])
        if ordered and not u < v:
            raise ParseError("edges must be written with u < v", no, a[1])
        if u == v:
            raise ParseError("self-loop", no, a[1])
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise ParseError("duplicate edge", lines.items[lines.pos - 1][0])
    return edges


def _finish(lines: _Lines):
    if not lines.done():
        no, tokens = lines.items[lines.pos]
        raise ParseError(f"unexpected '{tokens[0][0]}'", no, tokens[0][1])


def _read_graph(lines: _Lines) -> Graph:
    no, (a, b) = lines.take("graph", 2)
    n, m = _count(a, no), _count(b, no)
    return Graph(range(n), _edges(lines, m, set(range(n)), True))


def parse_graph(text: str) -> Graph:
    lines = _Lines(text)
    g = _read_graph(lines)
    _finish(lines)
    return g


def _read_points(lines: _Lines, n: int) -> dict:
    pos = {}
    for _ in range(n):
        no, (vid, x, y) = lines.take("v", 3)
        label = _int(vid, no)
        if label in pos:
            raise ParseError(f"vertex {label} declared twice", no, vid[1])
        pos[label] = point(_scalar(x, no), _scalar(y, no))
    return pos


def _read_drawing_block(lines: _Lines):
    no, (a, b) = lines.take("drawing", 2)
    n, m = _count(a, no), _count(b, no)
    pos = _read_points(lines, n)
    edges = _edges(lines, m, set(pos), False)
    return Graph(pos, edges), pos


def parse_drawing(text: str) -> Drawing:
    lines = _Lines(text)
    graph, pos = _read_drawing_block(lines)
    _finish(lines)
    return Drawing(graph, pos)


def _read_ring(lines: _Lines, keyword: str) -> Polygon:
    no, (a,) = lines.take(keyword, 1)
    k = _count(a, no)
    pts = []
    for _ in range(k):
        cno, (x, y) = lines.take(None, 2)
        pts.append(point(_scalar(x, cno), _scalar(y, cno)))
    return Polygon(pts)


def parse_polygon(text: str) -> Polygon:
    lines = _Lines(text)
    poly = _read_ring(lines, "polygon")
    _finish(lines)
    return poly


def parse_scene(text: str) -> Scene:
    lines = _Lines(text)
    graph, pos = _read_drawing_block(lines)
    obstacles = []
    container = None
    while not lines.done():
        word = lines.peek_keyword()
        if word == "obstacle":
            obstacles.append(_read_ring(lines, "obstacle"))
        elif word == "container" and container is None:
            container = _read_ring(lines, "container")
        else:
            no, tokens = lines.items[lines.pos]
            raise ParseError(f"expected 'obstacle' or 'container', found '{word}'", no, tokens[0][1])
    return Scene(pos, obstacles, container=container, graph=graph)


# -- serialization ---------------------------------------------------------------------

def _edge_lines(graph: Graph) -> list:
    return [f"e {u} {v}" for u, v in graph.sorted_edges()]


def _ring_lines(keyword: str, poly: Polygon) -> list:
    return [f"{keyword} {len(poly.vertices)}"] + [f"{format_scalar(p.x)} {format_scalar(p.y)}"
                                                for p in poly.vertices]


def serialize_graph(graph: Graph) -> str:
    return "\n".join([f"graph {graph.n} {graph.m}"] + _edge_lines(graph)) + "\n"


def _drawing_lines(graph: Graph, pos) -> list:
    out = [f"drawing {len(pos)} {graph.m if graph is not None else 0}"]
    for v in sorted(pos):
        p = pos[v]
        out.append(f"v {v} {format_scalar(p[0])} {format_scalar(p[1])}")
    if graph is not None:
        out += _edge_lines(graph)
    return out


def serialize_drawing(drawing: Drawing) -> str:
    return "\n".join(_drawing_lines(drawing.graph, drawing.position)) + "\n"


def serialize_polygon(poly: Polygon) -> str:
    return "\n".join(_ring_lines("polygon", poly)) + "\n"


def serialize_scene(scene: Scene) -> str:
    out = _drawing_lines(scene.graph, scene.points)
    for poly in scene.obstacles:
        out += _ring_lines("obstacle", poly)
    if scene.container is not None:
        out += _ring_lines("container", scene.container)
    return "\n".join(out) + "\n"
