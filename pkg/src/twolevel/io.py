"""JSON readers and writers for the objects the CLI handles.

Rationals are written as integers when integral and as "p/q" strings
otherwise; floats are rejected on input so every value stays exact.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .binary import BinaryMatroid
from .errors import InputError
from .graphs import Graph
from .matching import SMInstance
from .matroids import TwoSumTree
from .polytope import FSummary, HPolytope, VPolytope
from .posets import Poset

FIXTURES = ("p8_2.json", "hansen_p7.json", "appendixF.json")


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"boolean {x!r} is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad rational {x!r}") from None
    raise InputError(f"expected an integer or a 'p/q' string, got {x!r}")


def parse_int(x) -> int:
    q = parse_rational(x)
    if q.denominator != 1:
        raise InputError(f"expected an integer, got {x!r}")
    return int(q)


def fmt_rational(q) -> int | str:
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_jsonable(obj: Any) -> Any:
    """Recursively convert reports into plain JSON values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return fmt_rational(obj)
    if isinstance(obj, int):
        return obj
    if hasattr(obj, "as_dict"):
        return to_jsonable(obj.as_dict())
    if dataclasses.is_dataclass(obj):
        return to_jsonable({f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)})
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_jsonable(x) for x in obj]
        return sorted(items, key=repr) if isinstance(obj, (set, frozenset)) else items
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2)


def load_json(source: str | Path) -> Any:
    """Parse inline JSON text or read a file."""
    text = str(source)
    if text.lstrip().startswith(("{", "[")):
        payload = text
    else:
        try:
            payload = Path(text).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {text}: {exc.strerror}") from None
    try:
        return json.loads(payload)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _need(data, key, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"missing field {key!r}")
    val = data[key]
    if kind is not None and not isinstance(val, kind):
        raise InputError(f"field {key!r} has the wrong type")
    return val


# ---------------------------------------------------------------------------
# polytopes


def polytope_from_json(data) -> VPolytope | HPolytope:
    dim = parse_int(_need(data, "dim"))
    if dim < 0:
        raise InputError("negative dimension")
    if "vertices" in data:
        verts = _need(data, "vertices", list)
        return VPolytope(dim, tuple(tuple(parse_rational(x) for x in _row(p)) for p in verts))
    if "ineqs" in data:
        ineqs = [_ineq(r) for r in _need(data, "ineqs", list)]
        eqs = [_ineq(r) for r in data.get("eqs", [])]
        return HPolytope(dim, tuple(ineqs), tuple(eqs))
    raise InputError("polytope needs 'vertices' or 'ineqs'")


def _row(p):
    if not isinstance(p, list):
        raise InputError("vector must be a list")
    return p


def _ineq(r) -> tuple[tuple[int, ...], int]:
    a = [parse_rational(x) for x in _row(_need(r, "a"))]
    b = parse_rational(_need(r, "b"))
    den = 1
    for q in a + [b]:
        den = den * q.denominator // _gcd(den, q.denominator)
    return tuple(int(q * den) for q in a), int(b * den)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def polytope_to_json(p: VPolytope | HPolytope) -> dict:
    if isinstance(p, VPolytope):
        return {"dim": p.dim, "vertices": [[fmt_rational(x) for x in v] for v in p.vertices]}
    return {
        "dim": p.dim,
        "ineqs": [{"a": list(a), "b": b} for a, b in p.inequalities],
        "eqs": [{"a": list(c), "b": d} for c, d in p.equations],
    }


def summary_to_json(s: FSummary) -> dict:
    return s.as_dict()


# ---------------------------------------------------------------------------
# combinatorial objects


def graph_from_json(data) -> Graph:
    n = parse_int(_need(data, "n"))
    edges = _need(data, "edges", list)
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"edge {e!r} must be a pair")
    return Graph.from_edges(n, [(parse_int(u), parse_int(v)) for u, v in edges])


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def poset_from_json(data) -> Poset:
    n = parse_int(_need(data, "n"))
    rel = _need(data, "relations", list)
    for r in rel:
        if not isinstance(r, list) or len(r) != 2:
            raise InputError(f"relation {r!r} must be a pair")
    return Poset.from_relations(n, [(parse_int(i), parse_int(j)) for i, j in rel])


def poset_to_json(p: Poset) -> dict:
    return {"n": p.n, "relations": [list(c) for c in p.covers]}


def instance_from_json(data) -> SMInstance:
    n = parse_int(_need(data, "n"))
    men = _need(data, "men", list)
    women = _need(data, "women", list)
    try:
        return SMInstance(n, tuple(tuple(parse_int(x) for x in r) for r in men),
                          tuple(tuple(parse_int(x) for x in r) for r in women))
    except TypeError:
        raise InputError("preference lists must be lists of integers") from None


def instance_to_json(inst: SMInstance) -> dict:
    return {"n": inst.n, "men": [list(r) for r in inst.men], "women": [list(r) for r in inst.women]}


def tree_from_json(data) -> TwoSumTree:
    if not isinstance(data, dict):
        raise InputError("tree must be a JSON object")
    try:
        return TwoSumTree.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed tree: {exc}") from None


def matroid_from_json(data) -> BinaryMatroid:
    rows = parse_int(_need(data, "rows"))
    cols = parse_int(_need(data, "cols"))
    bits = _need(data, "bits", list)
    if len(bits) != rows or any(not isinstance(b, str) or len(b) != cols for b in bits):
        raise InputError("bits must be 'rows' strings of length 'cols'")
    if rows == 0:
        return BinaryMatroid(cols, (), tuple(data.get("labels", ())))
    return BinaryMatroid.from_bits(bits, data.get("labels", ()))


def matroid_to_json(m: BinaryMatroid) -> dict:
    return {"rows": m.r, "cols": m.d, "bits": m.to_bits(), "labels": list(m.labels)}


# ---------------------------------------------------------------------------
# bundled data


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise InputError(f"unknown fixture {name!r}")
    return Path(str(resources.files("twolevel") / "fixtures" / name))


def load_fixture(name: str):
    return polytope_from_json(load_json(fixture_path(name)))


__all__ = [
    "parse_rational",
    "fmt_rational",
    "to_jsonable",
    "dumps",
    "load_json",
    "polytope_from_json",
    "polytope_to_json",
    "graph_from_json",
    "graph_to_json",
    "poset_from_json",
    "poset_to_json",
    "instance_from_json",
    "instance_to_json",
    "tree_from_json",
    "matroid_from_json",
    "matroid_to_json",
    "fixture_path",
    "load_fixture",
    "FIXTURES",
]
