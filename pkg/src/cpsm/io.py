"""File formats: JSON instances, witnesses and reduction metadata, DIMACS formulas.

Floats go through ``json``'s shortest round-trip repr, so coordinates survive
a write/read cycle bit for bit.  Every writer replaces its target atomically.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from pathlib import Path

from .geometry import PolyCurve
from .reduction import ClauseRing, CornerSpec, Gadget, ReductionOutput, Role
from .sat import Formula
from .solvers import Instance, Variant


class InputError(ValueError):
    """A file could not be parsed or fails validation."""


def atomic_write_text(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent or ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.chmod(tmp, 0o666 & ~_umask())  # mkstemp creates 0600 files
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _umask() -> int:
    mask = os.umask(0)
    os.umask(mask)
    return mask


_NUMBER_LIST = re.compile(r"\[\s*([-+0-9.eE,\s]*?)\s*\]")


def _dump(obj) -> str:
    # One line per coordinate tuple keeps the files diffable without
    # spreading every number over its own line.
    text = json.dumps(obj, indent=1, allow_nan=False)
    text = _NUMBER_LIST.sub(lambda m: "[" + re.sub(r"\s+", " ", m.group(1)) + "]", text)
    return text + "\n"


def _load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e})") from e


def _point_list(value, what: str, dim: int | None = None) -> list[tuple]:
    if not isinstance(value, list) or not value:
        raise InputError(f"{what} must be a non-empty list of points")
    out = []
    for k, p in enumerate(value):
        if (not isinstance(p, list) or not p
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in p)):
            raise InputError(f"{what}[{k}] is not a list of numbers")
        if dim is not None and len(p) != dim:
            raise InputError(f"{what}[{k}] has {len(p)} coordinates, expected {dim}")
        out.append(tuple(float(c) for c in p))
    return out


# ------------------------------------------------------------------ instances

def instance_to_json(inst: Instance) -> dict:
    return {
        "dimension": inst.curve.dim,
        "epsilon": inst.epsilon,
        "curve": [list(v) for v in inst.curve.vertices],
        "points": [list(p) for p in inst.points],
        "variant": inst.variant.value,
    }


def instance_from_json(doc) -> Instance:
    if not isinstance(doc, dict):
        raise InputError("instance must be a JSON object")
    missing = {"dimension", "epsilon", "curve", "points", "variant"} - doc.keys()
    if missing:
        raise InputError("instance lacks " + ", ".join(sorted(missing)))
    dim = doc["dimension"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError("dimension must be a positive integer")
    eps = doc["epsilon"]
    if not isinstance(eps, (int, float)) or isinstance(eps, bool):
        raise InputError("epsilon must be a number")
    try:
        variant = Variant(doc["variant"])
    except ValueError:
        raise InputError(f"unknown variant {doc['variant']!r}") from None
    curve = _point_list(doc["curve"], "curve", dim)
    points = _point_list(doc["points"], "points", dim)
    try:
        return Instance(PolyCurve(curve), points, float(eps), variant)
    except ValueError as e:
        raise InputError(str(e)) from e


def read_instance(path) -> Instance:
    return instance_from_json(_load_json(path))


def write_instance(path, inst: Instance) -> None:
    atomic_write_text(path, _dump(instance_to_json(inst)))


def read_curve(path) -> PolyCurve:
    """A bare JSON list of points, or any object with a ``curve`` list."""
    doc = _load_json(path)
    if isinstance(doc, dict):
        doc = doc.get("curve")
    pts = _point_list(doc, "curve")
    if len({len(p) for p in pts}) != 1:
        raise InputError("curve points differ in dimension")
    try:
        return PolyCurve(pts)
    except ValueError as e:
        raise InputError(str(e)) from e


def write_curve(path, curve: PolyCurve) -> None:
    atomic_write_text(path, _dump({"curve": [list(v) for v in curve.vertices]}))


# ------------------------------------------------------------------ witnesses

def witness_from_json(doc, inst: Instance | None = None) -> tuple:
    if not isinstance(doc, dict) or "sequence" not in doc:
        raise InputError('witness must be an object with a "sequence" list')
    seq = doc["sequence"]
    if not isinstance(seq, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in seq):
        raise InputError("witness sequence must be a list of integers")
    if inst is not None:
        bad = [i for i in seq if not 0 <= i < inst.k]
        if bad:
            raise InputError(f"witness index {bad[0]} out of range for {inst.k} points")
    return tuple(seq)


def read_witness(path, inst: Instance | None = None) -> tuple:
    return witness_from_json(_load_json(path), inst)


def write_witness(path, w) -> None:
    atomic_write_text(path, _dump({"sequence": [int(i) for i in w]}))


# ------------------------------------------------------------------- formulas

def parse_dimacs(text: str) -> Formula:
    header = None
    literals: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"line {lineno}: bad problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise InputError(f"line {lineno}: bad problem line {line!r}") from None
            continue
        if header is None:
            raise InputError(f"line {lineno}: clause before the 'p cnf' header")
        try:
            literals += [int(tok) for tok in line.split()]
        except ValueError:
            raise InputError(f"line {lineno}: non-integer token") from None
    if header is None:
        raise InputError("missing 'p cnf' header")
    if literals and literals[-1] != 0:
        raise InputError("last clause is not terminated by 0")
    clauses, cur = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(cur)
            cur = []
        else:
            cur.append(lit)
    nvars, nclauses = header
    if len(clauses) != nclauses:
        raise InputError(f"header announces {nclauses} clauses, found {len(clauses)}")
    try:
        return Formula(nvars, clauses)
    except ValueError as e:
        raise InputError(str(e)) from e


def format_dimacs(f: Formula) -> str:
    lines = [f"p cnf {f.variable_count} {len(f.clauses)}"]
    lines += [" ".join(str(x) for x in c) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def read_formula(path) -> Formula:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}") from e
    return parse_dimacs(text)


def write_formula(path, f: Formula) -> None:
    atomic_write_text(path, format_dimacs(f))


# ------------------------------------------------------------ reduction meta

def _corner_to_json(c: CornerSpec) -> dict:
    return {"alpha": c.alpha, "eps": c.eps, "origin": list(c.origin), "heading": list(c.heading),
            "bend": c.bend, "points": {k: list(v) for k, v in sorted(c.points.items())}}


def _corner_from_json(d) -> CornerSpec:
    return CornerSpec(float(d["alpha"]), float(d["eps"]), tuple(d["origin"]), tuple(d["heading"]),
                      int(d["bend"]), {k: tuple(v) for k, v in d["points"].items()})


def reduction_meta(r: ReductionOutput) -> dict:
    return {
        "eps": r.eps,
        "formula": {"variable_count": r.formula.variable_count,
                    "clauses": [list(c) for c in r.formula.clauses]},
        "ring": {"radius": r.ring.radius, "center": list(r.ring.center),
                 "points": [list(p) for p in r.ring.points]},
        "roles": {str(i): str(role) for i, role in enumerate(r.roles)},
        "gadgets": [{
            "variable": g.variable,
            "pos_clauses": list(g.pos_clauses),
            "neg_clauses": list(g.neg_clauses),
            "corners": [_corner_to_json(c) for c in g.corners],
            "prefix": list(g.prefix),
            "true_path": list(g.true_path),
            "false_path": list(g.false_path),
            "suffix": list(g.suffix),
            "exempt_segments": list(g.exempt_segments),
            "point_range": list(g.point_range),
            "vertex_range": list(g.vertex_range),
        } for g in r.gadgets],
    }


def reduction_from_meta(inst: Instance, meta) -> ReductionOutput:
    try:
        f = Formula(meta["formula"]["variable_count"], meta["formula"]["clauses"])
        rd = meta["ring"]
        eps = float(meta["eps"])
        ring = ClauseRing(float(rd["radius"]), tuple(tuple(p) for p in rd["points"]), eps,
                          tuple(rd["center"]))
        roles = tuple(Role.parse(meta["roles"][str(i)]) for i in range(len(meta["roles"])))
        gadgets = tuple(Gadget(
            g["variable"], tuple(g["pos_clauses"]), tuple(g["neg_clauses"]),
            tuple(_corner_from_json(c) for c in g["corners"]), tuple(g["prefix"]),
            tuple(g["true_path"]), tuple(g["false_path"]), tuple(g["suffix"]),
            tuple(g["exempt_segments"]), tuple(g["point_range"]), tuple(g["vertex_range"]),
        ) for g in meta["gadgets"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed reduction metadata: {e!r}") from e
    if len(roles) != inst.k:
        raise InputError("metadata roles do not match the instance's point count")
    return ReductionOutput(f, eps, inst, roles, ring, gadgets)


def read_reduction(instance_path, meta_path) -> ReductionOutput:
    return reduction_from_meta(read_instance(instance_path), _load_json(meta_path))


def write_reduction(instance_path, meta_path, r: ReductionOutput) -> None:
    write_instance(instance_path, r.instance)
    atomic_write_text(meta_path, _dump(reduction_meta(r)))
