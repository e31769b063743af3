"""Acceptance gate: eight end-to-end criteria, one PASS/FAIL line each.

Run directly (``python3 tests/test_acceptance.py``) for the report alone;
under pytest the lines are printed in the terminal summary.
"""

import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from gen import general_points, random_connected_graph, random_convex, random_graph, random_scene, small_cover_graph
from obstacles.arrangement import Drawing
from obstacles.constructions import (
    CORNER_CONSTANT, cap_arrangement, corner_count, lower_bound_drawing, min_vertex_cover,
    planarization_representation, vc_obstacle_bound, vc_representation, verify_cap_claim,
    verify_nonedge_claim,
)
from obstacles.geometry import GeometryError, point
from obstacles.graph import Graph
from obstacles.hardness import expected_sizes, gen_instance, small_instances, three_partition_brute, witness_placement
from obstacles.kernelize import (
    YES, decide_trivial, kernel, ramsey_r33_bruteforce, ramsey_upper, typesize,
)
from obstacles.obs_solver import build_cover_instance, min_face_cover, min_face_cover_bruteforce
from obstacles.order_types import (
    blocking_profile, curve_crossings, dual_line, dual_point, is_cyclic_interval, is_vertically_above,
    line_of_point_pair, nonedge_criterion, point_above_line, tangent_curve,
)
from obstacles.visibility import is_obstacle_representation, visibility_graph

RESULTS = {}


def record(number, title, ok, detail, started):
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail}; {time.perf_counter() - started:.1f}s)"
    RESULTS[number] = line
    print(line)
    return ok


def criterion_1():
    t = time.perf_counter()
    rng = random.Random(101)
    bad = 0
    for _ in range(200):
        scene = random_scene(rng, n_max=12, k_max=3)
        prof = blocking_profile(scene)
        bad += sum(not is_cyclic_interval(prof.radial[v], m) for (v, _), m in prof.intervals.items())
        bad += nonedge_criterion(scene, prof) != visibility_graph(scene)
    ok = bad == 0 and time.perf_counter() - t < 60
    return record(1, "blocking intervals and mutual-containment law on 200 scenes", ok, f"{bad} violations", t)


def criterion_2():
    t = time.perf_counter()
    rng = random.Random(202)
    bad, worst = 0, 0
    for _ in range(100):
        g = small_cover_graph(rng, n_max=12, k_max=3)
        cover = min_vertex_cover(g)
        scene = vc_representation(g, cover)
        worst = max(worst, len(scene.obstacles))
        if not is_obstacle_representation(scene, g) or len(scene.obstacles) > vc_obstacle_bound(len(cover)):
            bad += 1
    ok = bad == 0 and worst <= 28 and time.perf_counter() - t < 120
    return record(2, "vertex-cover representation on 100 graphs", ok, f"{bad} failures, max {worst} obstacles", t)


def criterion_3():
    t = time.perf_counter()
    parts = []
    ok = True
    for n in (8, 12, 16):
        lb = lower_bound_drawing(n)
        res = min_face_cover(build_cover_instance(lb.drawing, lb.arrangement))
        need = math.ceil(math.comb(n // 4, 2) / 2)
        good = (verify_cap_claim(cap_arrangement(lb.m)) and verify_nonedge_claim(lb)
                and res.optimal and res.size >= need)
        ok &= good
        parts.append(f"obs(D_{n})={res.size}>={need}")
    ok &= time.perf_counter() - t < 600
    return record(3, "lower-bound drawings", ok, ", ".join(parts), t)


def _small_instances(rng, count):
    out = []
    while len(out) < count:
        n = rng.randint(3, 7)
        d = Drawing(random_graph(rng, n, rng.choice([0.3, 0.5, 0.7])), dict(enumerate(general_points(rng, n, 25))))
        inst = build_cover_instance(d)
        if inst.nonedges and len(inst.faces) <= 20:
            out.append(inst)
    return out


def criterion_4():
    t = time.perf_counter()
    bad = 0
    for inst in _small_instances(random.Random(404), 50):
        res = min_face_cover(inst)
        if not res.optimal or res.size != min_face_cover_bruteforce(inst)[0]:
            bad += 1
    return record(4, "exact solver equals exhaustive search on 50 drawings", bad == 0, f"{bad} discrepancies", t)


def criterion_5():
    t = time.perf_counter()
    solved, bad = 0, 0
    for S in small_instances(3, 24):
        part = three_partition_brute(S)
        if part is None:
            continue
        solved += 1
        gadget = gen_instance(S)
        sizes = (gadget.graph.n, gadget.graph.m, gadget.num_bays)
        formula = (3 * S.m + S.B * S.m, math.comb(3 * S.m, 2) + S.B * S.m, S.m * S.B)
        if sizes != formula or sizes != expected_sizes(S) or not witness_placement(S, part, gadget).verify():
            bad += 1
    return record(5, "3-Partition witness placements", bad == 0 and solved > 0,
                  f"{solved} solvable instances, {bad} failures", t)


def criterion_6():
    t = time.perf_counter()
    rng = random.Random(606)
    bad, ratio = 0, Fraction(0)
    for i in range(50):
        g = random_connected_graph(rng, 10)
        scene = planarization_representation(g, seed=i)
        bound = CORNER_CONSTANT * (g.m ** 2 + g.n)
        ratio = max(ratio, Fraction(corner_count(scene), bound))
        if not is_obstacle_representation(scene, g) or corner_count(scene) > bound:
            bad += 1
    return record(6, f"planarization representation, corners <= {CORNER_CONSTANT}(m^2+n)", bad == 0,
                  f"{bad} failures, worst corners/bound {float(ratio):.2f}", t)


def criterion_7():
    t = time.perf_counter()
    bad = 0
    for k in range(5):
        g = Graph(range(2 * k + 1), [(2 * i, 2 * i + 1) for i in range(k)])
        bound = 1 + math.comb(k, 2) + k * 2 ** k
        for h in range(1, bound + 4):
            bad += (decide_trivial(g, h) == YES) != (h >= bound)
    rng = random.Random(707)
    for _ in range(100):
        g = small_cover_graph(rng, p=0.6)
        thr = rng.randint(1, 3)
        a = kernel(g, 3, thr)
        bad += kernel(a.graph, 3, thr).graph != a.graph
        bad += a.graph.n > a.size_bound
    r33 = ramsey_r33_bruteforce()
    bad += not (ramsey_upper(2, 3) >= r33 and typesize(1, 2) >= r33)
    return record(7, "kernel rules", bad == 0, f"{bad} violations, R(3,3)={r33}<=64", t)


def criterion_8():
    t = time.perf_counter()
    rng = random.Random(808)
    bad = 0
    for _ in range(100):
        poly = random_convex(rng, 20, 6)
        tau, beta = tangent_curve(poly, "upper"), tangent_curve(poly, "lower")
        bad += not all(a > b for a, b in zip(tau.slopes, tau.slopes[1:]))
        bad += not all(a < b for a, b in zip(beta.slopes, beta.slopes[1:]))
        for _ in range(10):
            p = point(Fraction(rng.randint(-120, 120), 4), Fraction(rng.randint(-120, 120), 4))
            try:
                up = curve_crossings(tau, p)
                down = curve_crossings(beta, p)
            except GeometryError:
                continue
            bad += len(up) > 2 or len(down) > 2
            if is_vertically_above(p, poly):
                bad += len(up) != 2
    for _ in range(500):
        p = point(Fraction(rng.randint(-60, 60), 3), Fraction(rng.randint(-60, 60), 3))
        a = point(rng.randint(-20, 20), rng.randint(-20, 20))
        b = point(a.x + rng.randint(1, 20), rng.randint(-20, 20))
        line = line_of_point_pair(a, b)
        bad += dual_point(dual_line(p)) != p
        m, c = dual_line(p)
        lstar = dual_point(line)
        side = lstar.y - (m * lstar.x + c)
        bad += point_above_line(p, line) != (side > 0) - (side < 0)
    return record(8, "dual tangent curves and duality", bad == 0, f"{bad} violations", t)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(check):
    assert check()


if __name__ == "__main__":
    results = [check() for check in CRITERIA]
    raise SystemExit(0 if all(results) else 1)
