import random
from fractions import Fraction
from pathlib import Path

import pytest

from interbody.boundary import icosphere
from interbody.polytope import build_polygon, build_polytope, translate
from interbody.exceptions import DegenerateInput

DATA = Path(__file__).resolve().parent.parent / "data"

TRIANGLE = [(0, 1), (-1, -1), (1, -1)]


def square(lo=-1, hi=1):
    return build_polygon([(lo, lo), (hi, lo), (hi, hi), (lo, hi)])


def cube(lo=-1, hi=1):
    from itertools import product
    return build_polytope([tuple(Fraction(c) for c in p) for p in product((lo, hi), repeat=3)])


def triangle():
    return build_polygon(TRIANGLE)


def random_simplex_3d(rng):
    while True:
        pts = [tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3)) for _ in range(4)]
        try:
            return build_polytope(pts)
        except DegenerateInput:
            continue
        except Exception:
            continue


def icosahedron():
    verts, _ = icosphere(0)
    return build_polytope(verts)


def random_polygon(rng, n=None, symmetric=False, scale=6):
    """Random lattice-ish polygon; symmetric ones are closed under negation."""
    while True:
        k = n or rng.randint(3, 7)
        if symmetric:
            half = [(Fraction(rng.randint(-scale, scale)), Fraction(rng.randint(-scale, scale)))
                    for _ in range(max(2, k // 2))]
            pts = half + [(-x, -y) for x, y in half]
        else:
            pts = [(Fraction(rng.randint(-scale, scale)), Fraction(rng.randint(-scale, scale))) for _ in range(k)]
        try:
            P = build_polygon(pts)
        except DegenerateInput:
            continue
        if P.n_vertices >= 3:
            return P


def polygon_corpus(seed=2024, count=60):
    """Mixed corpus: symmetric and not, origin interior / on edge / at vertex / outside."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kind = len(out) % 6
        if kind == 0:
            out.append(random_polygon(rng, symmetric=True))
            continue
        P = random_polygon(rng)
        if kind == 1:
            # centroid of the vertices is interior
            c = tuple(sum(v[i] for v in P.vertices) / P.n_vertices for i in range(2))
            out.append(translate(P, (-c[0], -c[1])))
        elif kind == 2:
            a, b = P.vertices[0], P.vertices[1]
            m = tuple((a[i] + b[i]) / 2 for i in range(2))
            out.append(translate(P, (-m[0], -m[1])))
        elif kind == 3:
            v = P.vertices[rng.randrange(P.n_vertices)]
            out.append(translate(P, (-v[0], -v[1])))
        elif kind == 4:
            out.append(translate(P, (Fraction(20), Fraction(rng.randint(-3, 3)))))
        else:
            out.append(P)
    return out


@pytest.fixture
def tri():
    return triangle()


@pytest.fixture
def sq():
    return square()


@pytest.fixture
def sq02():
    return square(0, 2)


@pytest.fixture
def cube11():
    return cube()


@pytest.fixture
def cube02():
    return cube(0, 2)


@pytest.fixture(scope="session")
def corpus():
    return polygon_corpus()


# -- acceptance bookkeeping --------------------------------------------------------------
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line per criterion; printed in the terminal summary."""
    marker = request.node.get_closest_marker("criterion")
    num, title = marker.args
    state = {"detail": ""}
    yield state
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE[num] = (title, ok, state["detail"])
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {title} {state['detail']}".rstrip())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title} {detail}".rstrip())
