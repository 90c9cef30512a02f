"""JSON/CSV/OFF serialization of polytopes, chambers, pieces and reports."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .arrangement import Chamber, CentralHyperplane
from .convexity import ConvexityReport, Witness
from .exceptions import InterbodyError
from .polytope import Polytope, build_polytope
from .radial import RadialPiece
from .translation import AffineHyperplane, Region


class FormatError(InterbodyError):
    pass


def rat_json(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec_json(v) -> list:
    return [rat_json(c) for c in v]


def _parse_rat(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise FormatError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"{where}: bad rational {value!r}") from exc


def polytope_from_dict(data: Any) -> Polytope:
    if not isinstance(data, dict):
        raise FormatError("polytope JSON must be an object")
    try:
        dim = int(data["dim"])
        raw = data["vertices"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"missing or invalid field: {exc}") from exc
    verts = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != dim:
            raise FormatError(f"vertex {i}: expected {dim} coordinates")
        verts.append(tuple(_parse_rat(c, f"vertex {i}") for c in row))
    facets = data.get("facets")
    if facets is not None and dim == 2:
        facets = None
    return build_polytope(verts, facets)


def parse_polytope(text: str) -> Polytope:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return polytope_from_dict(data)


def load_polytope(path: str) -> Polytope:
    with open(path, encoding="utf-8") as fh:
        return parse_polytope(fh.read())


def polytope_to_dict(P: Polytope) -> dict:
    out = {"dim": P.dim, "vertices": [vec_json(v) for v in P.vertices]}
    if P.dim >= 3:
        out["facets"] = [list(f.vertices) for f in P.facets]
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def chamber_to_dict(C: Chamber) -> dict:
    return {
        "cocircuit": str(C.cocircuit),
        "witness": vec_json(C.witness),
        "crossed_edges": [list(e) for e in C.crossed_edges],
    }


def piece_to_dict(piece: RadialPiece) -> dict:
    return {
        "p": piece.p.to_json(),
        "q": piece.q.to_json(),
        "numerator": piece.numerator.to_json(),
        "denominator": piece.denominator.to_json(),
        "boundary": piece.boundary.to_json(),
        "boundary_str": str(piece.boundary),
    }


def central_to_dict(h: CentralHyperplane) -> dict:
    return {"vertex": h.vertex_index, "normal": vec_json(h.normal)}


def affine_to_dict(h: AffineHyperplane) -> dict:
    return {"normal": vec_json(h.normal), "offset": str(h.offset), "generators": list(h.generators)}


def region_to_dict(r: Region) -> dict:
    return {"signs": str(r), "witness": vec_json(r.witness_t)}


def witness_to_dict(w: Witness) -> dict:
    return {
        "cocircuit": str(w.chamber.cocircuit),
        "a": vec_json(w.a), "b": vec_json(w.b),
        "alpha": str(w.alpha), "beta": str(w.beta),
        "p_a": vec_json(w.p_a), "p_b": vec_json(w.p_b),
        "p_ab": vec_json(w.p_ab), "q": vec_json(w.q),
        "gap": str(w.gap),
    }


def report_to_dict(r: ConvexityReport) -> dict:
    out = {
        "verdict": r.verdict,
        "reason": r.reason,
        "symmetric": r.symmetric,
        "origin": {"tag": r.origin.tag, "facet": r.origin.facet,
                   "face": list(r.origin.face) if r.origin.face is not None else None},
        "witness": witness_to_dict(r.witness) if r.witness else None,
        "per_chamber": [
            {"cocircuit": str(c.chamber.cocircuit), "piece_degree": c.piece_degree,
             "parallel_edges": c.parallel_edges}
            for c in r.per_chamber
        ],
    }
    if r.facet is not None:
        out["facet"] = r.facet
    if r.slice_chain or r.base_report is not None:
        out["asymmetric_axis"] = r.asymmetric_axis
        out["slice_chain"] = [
            {"axis": s.axis, "height": str(s.height), "base_bounds": [vec_json(b) for b in s.base_bounds]}
            for s in r.slice_chain
        ]
        out["base_report"] = report_to_dict(r.base_report) if r.base_report else None
    if r.probe is not None:
        out["probe"] = {
            "pairs": r.probe.pairs,
            "min_margin": r.probe.min_margin,
            "violator": [vec_json(v) for v in r.probe.violator] if r.probe.violator else None,
        }
    return out


def fmt_number(x: Fraction, exact: bool) -> str:
    if exact:
        return str(x)
    return format(float(x), ".12g")


def write_off(fh, points, faces) -> None:
    fh.write("OFF\n")
    fh.write(f"{len(points)} {len(faces)} 0\n")
    for p in points:
        fh.write(" ".join(format(float(c), ".12g") for c in p) + "\n")
    for f in faces:
        fh.write(f"{len(f)} " + " ".join(str(i) for i in f) + "\n")
