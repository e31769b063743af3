"""The ``obsrep`` command line tool.

Exit codes: 0 success, 2 parse error, 3 invariant violation, 4 solver
budget exceeded.  Every run that writes files also writes
``<first output>.manifest.json`` listing input digests, parameters and
output digests.  Nothing time-dependent is recorded, so reruns with the
same inputs are byte-identical.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import sys
from importlib import metadata
from pathlib import Path

from .arrangement import DrawingError
from .constructions import (
    cap_arrangement, corner_bound, corner_count, lower_bound_drawing, min_vertex_cover,
    planarization_representation, vc_obstacle_bound, vc_representation,
    verify_cap_claim, verify_nonedge_claim,
)
from .geometry import GeometryError, format_scalar
from .hardness import (
    PartitionError, PartitionInstance, gen_instance, three_partition_brute, witness_placement,
)
from .io import (
    ParseError, parse_drawing, parse_graph, parse_scene, serialize_drawing, serialize_graph,
    serialize_polygon, serialize_scene,
)
from .kernelize import decide_trivial, etr_export, etr_stats, kernel
from .obs_solver import DegenerateDrawing, faces_to_obstacles, obs_of_drawing
from .order_types import (
    blocking_profile, chirotope, cutpath, is_cyclic_interval, radial_system, tangent_curve,
)
from .svg import emit_svg
from .visibility import SceneError, is_obstacle_representation, visibility_graph

EXIT_OK, EXIT_PARSE, EXIT_INVARIANT, EXIT_BUDGET = 0, 2, 3, 4


class BudgetExhausted(Exception):
    pass


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0.0.0"


class _Run:
    """Collects inputs and outputs of one invocation for the manifest."""

    def __init__(self, command: str, params: dict):
        self.command = command
        self.params = params
        self.inputs = {}
        self.outputs = {}

    def read(self, path: str) -> str:
        data = Path(path).read_bytes()
        self.inputs[path] = hashlib.sha256(data).hexdigest()
        return data.decode("utf-8")

    def write(self, path: str, text: str):
        data = text.encode("utf-8")
        Path(path).write_bytes(data)
        self.outputs[path] = hashlib.sha256(data).hexdigest()

    def finish(self):
        if not self.outputs:
            return
        first = next(iter(self.outputs))
        manifest = {
            "command": self.command,
            "inputs": [{"path": p, "sha256": d} for p, d in self.inputs.items()],
            "parameters": self.params,
            "outputs": [{"path": p, "sha256": d} for p, d in self.outputs.items()],
            "tool_version": _version(),
        }
        Path(first + ".manifest.json").write_text(
            json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _say(*lines):
    for line in lines:
        print(line)


# -- subcommands ------------------------------------------------------------------

def cmd_obs_drawing(args, run: _Run):
    drawing = parse_drawing(run.read(args.drawing))
    inst, res = obs_of_drawing(drawing, "greedy" if args.greedy else "exact", args.budget)
    _say(f"obs(D) = {res.size}",
         f"optimal = {str(res.optimal).lower()}",
         f"faces = {' '.join(map(str, sorted(res.chosen)))}")
    if args.emit_scene or args.svg:
        scene = faces_to_obstacles(drawing, res.chosen, inst)
        if args.emit_scene:
            run.write(args.emit_scene, serialize_scene(scene))
    if args.svg:
        run.write(args.svg, emit_svg(inst.arrangement, {"chosen": sorted(res.chosen)}))
    if not res.optimal and not args.greedy:
        raise BudgetExhausted(f"node budget {args.budget} exhausted; cover is an upper bound")


def cmd_vc_represent(args, run: _Run):
    graph = parse_graph(run.read(args.graph))
    cover = min_vertex_cover(graph)
    if args.k is not None and len(cover) > args.k:
        raise SceneError(f"vertex cover number {len(cover)} exceeds k={args.k}")
    scene = vc_representation(graph, cover)
    verdict = is_obstacle_representation(scene, graph)
    k = len(cover)
    _say(f"k = {k}", f"obstacles = {len(scene.obstacles)}", f"bound = {vc_obstacle_bound(k)}",
         f"verified = {verdict}")
    if args.output:
        run.write(args.output, serialize_scene(scene))
    if args.svg:
        run.write(args.svg, emit_svg(scene, {"graph": graph}))
    if not verdict:
        raise SceneError(f"construction failed to verify: {verdict}")


def cmd_lb_drawing(args, run: _Run):
    lb = lower_bound_drawing(args.n)
    _say(f"n = {lb.n}", f"m = {lb.m}", f"epsilon = {format_scalar(lb.epsilon)}",
         f"excluded pairs = {len(lb.X)}")
    if args.verify:
        cap = verify_cap_claim(cap_arrangement(lb.m))
        nonedge = verify_nonedge_claim(lb)
        _say(f"cap claim = {str(cap).lower()}", f"nonedge claim = {str(nonedge).lower()}")
        if not (cap and nonedge):
            raise DrawingError("lower-bound claims failed")
    if args.output:
        run.write(args.output, serialize_drawing(lb.drawing))
    if args.svg:
        run.write(args.svg, emit_svg(lb.drawing, {"nonedges": True}))


def cmd_planar_represent(args, run: _Run):
    graph = parse_graph(run.read(args.graph))
    scene = planarization_representation(graph, seed=args.seed)
    verdict = is_obstacle_representation(scene, graph)
    _say(f"obstacles = {len(scene.obstacles)}", f"corners = {corner_count(scene)}",
         f"corner bound = {corner_bound(graph)}", f"verified = {verdict}")
    if args.output:
        run.write(args.output, serialize_scene(scene))
    if args.svg:
        run.write(args.svg, emit_svg(scene, {"graph": graph}))
    if not verdict:
        raise SceneError(f"construction failed to verify: {verdict}")


def _values(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"--values must be comma-separated integers, got {text!r}") from None


def cmd_hardness_gen(args, run: _Run):
    S = PartitionInstance(_values(args.values))
    gadget = gen_instance(S)
    prefix = args.output
    run.write(prefix + ".graph", serialize_graph(gadget.graph))
    run.write(prefix + ".poly", serialize_polygon(gadget.polygon))
    _say(f"m = {S.m}", f"B = {S.B}", f"vertices = {gadget.graph.n}", f"edges = {gadget.graph.m}",
         f"bays = {gadget.num_bays}", f"polygon vertices = {len(gadget.polygon.vertices)}")
    shown = gadget
    if args.witness:
        partition = three_partition_brute(S)
        if partition is None:
            _say("partition = none")
        else:
            placement = witness_placement(S, partition, gadget)
            verdict = placement.verify()
            _say("partition = " + " ".join("(" + ",".join(map(str, t)) + ")" for t in partition),
                 f"verified = {verdict}")
            run.write(prefix + ".placement", serialize_scene(placement.scene()))
            shown = placement
            if not verdict:
                raise SceneError(f"witness placement failed: {verdict}")
    if args.svg:
        run.write(args.svg, emit_svg(shown))


def cmd_ordertype(args, run: _Run):
    drawing = parse_drawing(run.read(args.points))
    pts = dict(drawing.position)
    chi = chirotope(pts)
    radial = radial_system(pts)
    labels = sorted(pts)
    _say(f"points = {len(labels)}")
    for a, b, c in itertools.combinations(labels, 3):
        _say(f"chi {a} {b} {c} = {chi(a, b, c):+d}")
    for v in labels:
        _say(f"R({v}) = {' '.join(map(str, radial[v]))}")


def cmd_blocking(args, run: _Run):
    scene = parse_scene(run.read(args.scene))
    profile = blocking_profile(scene)
    for (v, k), members in sorted(profile.intervals.items()):
        flag = "interval" if is_cyclic_interval(profile.radial[v], members) else "NOT-interval"
        _say(f"I_{k}({v}) = [{' '.join(map(str, members))}] {flag}")
    _say("visibility edges = " + " ".join(f"{u}-{v}" for u, v in visibility_graph(scene).sorted_edges()))


def cmd_cutpath(args, run: _Run):
    scene = parse_scene(run.read(args.scene))
    if not 0 <= args.obstacle < len(scene.obstacles):
        raise SceneError(f"scene has no obstacle {args.obstacle}")
    poly = scene.obstacles[args.obstacle]
    others = {v: p for v, p in scene.points.items()}
    for orientation in ("upper", "lower"):
        curve = tangent_curve(poly, orientation)
        seq = cutpath(curve, others)
        _say(f"{orientation}: " + " ".join(f"{v}@{format_scalar(x)}" for v, x in seq))
    if args.svg:
        run.write(args.svg, emit_svg(scene))


def cmd_kernel(args, run: _Run):
    graph = parse_graph(run.read(args.graph))
    verdict = decide_trivial(graph, args.h)
    res = kernel(graph, args.h, threshold=args.threshold)
    _say(f"trivial = {verdict}", f"k = {res.k}",
         f"typesize = {res.typesize if res.typesize is not None else 'n/a'}",
         f"threshold = {res.threshold}", f"vertices = {graph.n} -> {res.graph.n}",
         f"size bound = {res.size_bound}")
    for v, sig in res.log:
        _say(f"removed {v} type ({' '.join(map(str, sig))})")
    if args.output:
        g, _ = res.graph.relabeled()
        run.write(args.output, serialize_graph(g))


def cmd_etr_export(args, run: _Run):
    graph = parse_graph(run.read(args.graph))
    text = etr_export(graph, args.h)
    run.write(args.output, text)
    stats = etr_stats(text)
    _say(*(f"{k} = {v}" for k, v in stats.items()))


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="obsrep", description="Obstacle representations of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("obs-drawing", help="exact obstacle number of a fixed drawing")
    s.add_argument("drawing")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--greedy", action="store_true")
    s.add_argument("--budget", type=int, default=1_000_000)
    s.add_argument("--emit-scene")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_obs_drawing)

    s = sub.add_parser("vc-represent", help="representation from a small vertex cover")
    s.add_argument("graph")
    s.add_argument("-k", type=int)
    s.add_argument("-o", "--output")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_vc_represent)

    s = sub.add_parser("lb-drawing", help="lower-bound drawing D_n")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--verify", action="store_true")
    s.add_argument("-o", "--output")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_lb_drawing)

    s = sub.add_parser("planar-represent", help="one obstacle per face of a drawing")
    s.add_argument("graph")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_planar_represent)

    s = sub.add_parser("hardness-gen", help="3-Partition gadget")
    s.add_argument("--values", required=True)
    s.add_argument("--witness", action="store_true")
    s.add_argument("-o", "--output", default="gadget", help="prefix for .graph/.poly/.placement")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_hardness_gen)

    s = sub.add_parser("ordertype", help="chirotope and radial system of a point set")
    s.add_argument("points")
    s.set_defaults(func=cmd_ordertype)

    s = sub.add_parser("blocking", help="blocking intervals of a scene")
    s.add_argument("scene")
    s.set_defaults(func=cmd_blocking)

    s = sub.add_parser("cutpath", help="dual tangent-curve crossings for one obstacle")
    s.add_argument("scene")
    s.add_argument("--obstacle", type=int, required=True)
    s.add_argument("--svg")
    s.set_defaults(func=cmd_cutpath)

    s = sub.add_parser("kernel", help="type-pruning kernel")
    s.add_argument("graph")
    s.add_argument("-H", "--obstacles", dest="h", type=int, required=True)
    s.add_argument("--threshold", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_kernel)

    s = sub.add_parser("etr-export", help="existential formula for h obstacles")
    s.add_argument("graph")
    s.add_argument("-H", "--obstacles", dest="h", type=int, required=True)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_etr_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    # -h is taken by help, so accept it as the obstacle count where a count follows
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] in ("kernel", "etr-export"):
        argv = ["-H" if a == "-h" and i + 1 < len(argv) and argv[i + 1].lstrip("-").isdigit() else a
                for i, a in enumerate(argv)]
    args = parser.parse_args(argv)
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command")}
    run = _Run(args.command, params)
    code = EXIT_OK
    try:
        args.func(args, run)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExhausted as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        code = EXIT_BUDGET
    except (DrawingError, SceneError, GeometryError, PartitionError, DegenerateDrawing, ValueError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        code = EXIT_INVARIANT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    run.finish()
    return code


if __name__ == "__main__":
    sys.exit(main())
