"""Command line front end: JSON in, JSON report out.

Exit status is 0 when every assertion passes, 1 on bad input and 2 when a
check fails.  Reports go to stdout with sorted keys; wall time and
diagnostics go to stderr so stdout is byte-identical between runs.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from typing import Callable

from . import io
from .errors import InputError, SizeGuardExceeded, TwoLevelError, VerificationError
from .polytope import (
    HPolytope,
    count_edges,
    equality_shape,
    facets_of,
    is_two_level,
    set_max_dim,
    get_max_dim,
    summary,
    vertices_of,
)

EXIT_OK, EXIT_INPUT, EXIT_ASSERT = 0, 1, 2


class Report:
    """Collects named pass/fail assertions next to a result payload."""

    def __init__(self, command: str, parameters: dict):
        self.command = command
        self.parameters = parameters
        self.result: dict = {}
        self.assertions: list[dict] = []

    def check(self, name: str, ok: bool, detail=None) -> bool:
        entry = {"name": name, "pass": bool(ok)}
        if detail is not None:
            entry["detail"] = detail
        self.assertions.append(entry)
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(a["pass"] for a in self.assertions)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
            "assertions": self.assertions,
            "ok": self.ok,
        }


# ---------------------------------------------------------------------------
# polytope commands


def _load_polytope(path: str):
    data = io.load_json(path)
    p = io.polytope_from_json(data)
    return p, bool(isinstance(data, dict) and data.get("integer_hull"))


def _as_vpolytope(p, integer_hull: bool, extended: bool):
    from .extremal import integer_hull as ihull

    if isinstance(p, HPolytope):
        if integer_hull:
            if not extended:
                raise InputError("integer hull of this input is an extended computation; pass --extended")
            return ihull(p)
        return vertices_of(p)
    return p


def cmd_check(args, rep: Report):
    p, ih = _load_polytope(args.path)
    v = _as_vpolytope(p, ih, args.extended)
    if v.is_empty:
        raise InputError("polytope is empty")
    s = summary(v)
    rep.result = {"summary": s.as_dict(), "violated": s.product > s.bound,
                  "integer_hull": ih, "equality_shape": equality_shape(v) if s.equality else None}
    if s.equality:
        rep.check("equality only for cube or cross-polytope", rep.result["equality_shape"] is not None)


def cmd_two_level(args, rep: Report):
    p, ih = _load_polytope(args.path)
    v = _as_vpolytope(p, ih, args.extended)
    ok, cert = is_two_level(v)
    rep.result = {"two_level": ok, "certificate": cert}


def cmd_edges(args, rep: Report):
    p, ih = _load_polytope(args.path)
    v = _as_vpolytope(p, ih, args.extended)
    rep.result = {"edges": count_edges(v), "f0": len(v), "fd1": len(facets_of(v).inequalities)}


def cmd_family(args, rep: Report):
    from . import families
    from .graphs import Graph

    params = io.load_json(args.params) if args.params else {}
    if not isinstance(params, dict):
        raise InputError("family parameters must be a JSON object")
    rep.parameters["params"] = params
    name = args.name

    def graph() -> Graph:
        return io.graph_from_json(params.get("graph", params))

    if name == "stab":
        v, _ = families.stab(graph())
        s = summary(v)
    elif name == "hansen":
        v, s = families.hansen(graph())
    elif name == "minupdown":
        v, _ = families.min_updown(io.parse_int(params.get("d")), io.parse_int(params.get("l")))
        s = summary(v)
    elif name == "birkhoff":
        v, s = families.birkhoff(io.parse_int(params.get("n")))
    elif name == "hanner":
        expr = params.get("expr")
        if not isinstance(expr, str):
            raise InputError("hanner needs an 'expr' string")
        v, s = families.hanner(expr)
    else:
        raise InputError(f"unknown family {name!r}")
    rep.result = {"summary": s.as_dict()}
    if s.method == "enumerated":
        tl = is_two_level(v)[0]
        rep.result["two_level"] = tl
        rep.check("two-level", tl)
        if s.equality:
            shape = equality_shape(v)
            rep.result["equality_shape"] = shape
            rep.check("equality only for cube or cross-polytope", shape is not None)
    rep.check("conjecture bound", s.satisfies)


def cmd_matroid_tree(args, rep: Report):
    from .matroids import compose_tree, conjecture_check_matroid, tree_base_count, tree_description

    t = io.tree_from_json(io.load_json(args.path))
    m = compose_tree(t)
    desc = tree_description(t, m)
    s = conjecture_check_matroid(t)
    rep.result = {
        "summary": s.as_dict(),
        "bases": tree_base_count(t),
        "ground_set": list(t.ground_set()),
        "rank": t.rank(),
        "description_rows": len(desc.h.inequalities),
        "irredundant_rows": len(desc.irredundant.inequalities),
        "cut_ranks": [{"set": list(F), "rank": r} for F, r in desc.cut_ranks],
    }
    n, k = len(t.ground_set()), len(t.nodes)
    rep.check("row count <= 2|E| + 2(t-1)", len(desc.h.inequalities) <= 2 * n + 2 * (k - 1))
    rep.check("conjecture bound", s.satisfies)


def cmd_cycle(args, rep: Report):
    from .binary import cycle_polytope

    cp = cycle_polytope(io.matroid_from_json(io.load_json(args.path)))
    rep.result = cp.report()
    rep.check("conjecture bound", cp.summary.satisfies)
    if cp.arithmetic_ok is not None:
        rep.check("2T + 4S <= d(2^r - 1)", cp.arithmetic_ok)


def cmd_cut(args, rep: Report):
    from .binary import cut_polytope

    cp = cut_polytope(io.graph_from_json(io.load_json(args.path)))
    rep.result = cp.report()
    if cp.two_level:
        rep.check("conjecture bound", cp.summary.satisfies)


def cmd_matching(args, rep: Report):
    from .matching import smp_polytope, verify_order_equivalence

    inst = io.instance_from_json(io.load_json(args.path))
    eq = verify_order_equivalence(inst)
    _, _, s = smp_polytope(inst)
    rep.result = {"equivalence": eq.as_dict(), "summary": s.as_dict()}
    rep.check("order-polytope equivalence", eq.ok)
    rep.check("conjecture bound", s.satisfies)


# ---------------------------------------------------------------------------
# reproduction suites


def rep_tradeoff(args, rep: Report):
    from .graphs import all_graphs, preimage_violations, tradeoff_check

    total = equality = 0
    bad_bound = bad_eq = bad_pre = 0
    for n in range(1, 7):
        for g in all_graphs(n):
            t = tradeoff_check(g)
            total += 1
            equality += t.equality
            bad_bound += not t.holds
            bad_eq += t.equality != t.trivial
            bad_pre += bool(preimage_violations(g))
    rep.result = {"graphs": total, "equality_cases": equality}
    rep.check("|C||S| <= n(2^n - 1) on all graphs n <= 6", bad_bound == 0)
    rep.check("equality exactly for cliques and anti-cliques", bad_eq == 0)
    rep.check("pre-image bound |f^-1(W)| <= 2|W|", bad_pre == 0)


def rep_minupdown_hansen(args, rep: Report):
    from .families import hansen, min_updown
    from .graphs import path

    v1, _ = min_updown(8, 2)
    s1, e1 = summary(v1), count_edges(v1)
    v2, s2 = hansen(path(7))
    e2 = count_edges(v2)
    rep.result = {
        "P8(2)": {"f0": s1.f0, "fd1": s1.fd1, "edges": e1},
        "Hans(P7)": {"f0": s2.f0, "fd1": s2.fd1, "edges": e2},
    }
    rep.check("P8(2): 68 vertices, 28 facets, 604 edges", (s1.f0, s1.fd1, e1) == (68, 28, 604))
    rep.check("Hans(P7): 68 vertices, 28 facets, 622 edges", (s2.f0, s2.fd1, e2) == (68, 28, 622))
    rep.check("edge counts differ, so not combinatorially equivalent", e1 != e2)
    fx1 = io.load_fixture("p8_2.json")
    fx2 = io.load_fixture("hansen_p7.json")
    rep.check("bundled P8(2) listing equals the generated vertex set", fx1.vertices == v1.vertices)
    # the listing puts the twist coordinate first; ours appends it
    moved = {p[1:] + p[:1] for p in fx2.vertices}
    rep.check("bundled Hans(P7) listing equals the generated vertex set", moved == set(v2.vertices))


def rep_sample_tree(args, rep: Report):
    from .matroids import compose_tree, conjecture_check_matroid, sample_tree, tree_base_count, tree_description

    t = sample_tree()
    m = compose_tree(t)
    desc = tree_description(t, m)
    s = conjecture_check_matroid(t)
    rep.result = {"bases": tree_base_count(t), "summary": s.as_dict(),
                  "cut_ranks": [{"set": list(F), "rank": r} for F, r in desc.cut_ranks]}
    rep.check("100 bases", tree_base_count(t) == 100 == len(m.bases))
    rep.check("tree description validated against facet enumeration", len(desc.irredundant.inequalities) == s.fd1)
    rep.check("conjecture bound", s.satisfies)


def rep_q4(args, rep: Report):
    from .extremal import hypercube_graph, spanning_tree_study

    r = spanning_tree_study(hypercube_graph(4))
    rep.result = r.as_dict()
    rep.check("d = 31", r.d == 31)
    rep.check("bound = 31 * 2^32", r.bound == 31 * 2**32)
    rep.check("f0 * fd1 >= 1.603e11", r.product >= 160_300_000_000)
    rep.check("violated", r.violated)


def rep_forests(args, rep: Report):
    from .extremal import forest_study

    rows = [forest_study(n) for n in range(3, 13)]
    rep.result = {"reports": [r.as_dict() for r in rows]}
    r9 = rows[9 - 3]
    rep.check("n=9: 9,880,866 > 9,437,184", (r9.product, r9.bound, r9.violated) == (9_880_866, 9_437_184, True))
    rep.check("exact counts dominate 3^n for n <= 6",
              all(r.details["forests_exact"] >= r.f0 for r in rows if "forests_exact" in r.details))


def rep_three_level(args, rep: Report):
    from .extremal import three_level_minupdown

    rows = [three_level_minupdown(d) for d in range(3, 11)]
    rep.result = {"reports": [r.as_dict() for r in rows]}
    rep.check("violated for every 3 <= d <= 10", all(r.violated for r in rows))
    rep.check("d=3: 49 > 48", (rows[0].product, rows[0].bound) == (49, 48))


def rep_frac_stab(args, rep: Report):
    from .extremal import fractional_stab_clique

    rows = {d: fractional_stab_clique(d) for d in range(3, 11)}
    rep.result = {"reports": [r.as_dict() for r in rows.values()]}
    rep.check("d=5: 330 > 320", (rows[5].product, rows[5].bound, rows[5].violated) == (330, 320, True))
    rep.check("violated exactly for d >= 5", all(r.violated == (d >= 5) for d, r in rows.items()))


def rep_integer_hull(args, rep: Report):
    from .extremal import integer_hull

    if not args.extended:
        rep.result = {"skipped": True, "reason": "needs --extended (about a minute)"}
        return
    h = io.load_fixture("appendixF.json")
    v = integer_hull(h)
    s = summary(v)
    rep.result = {"summary": s.as_dict()}
    rep.check("f0 * fd1 = 535392", s.product == 535392)
    rep.check("bound 98304 exceeded", s.bound == 98304 and s.product > s.bound)


def rep_marriage(args, rep: Report):
    from .matching import enumerate_stable, incidence, random_instance, smp_polytope, verify_order_equivalence

    rng = random.Random(args.seed)
    sizes = [2] * 20 + [3] * 40 + [4] * 35 + [5] * 5
    fails = 0
    for n in sizes:
        inst = random_instance(n, rng)
        eq = verify_order_equivalence(inst)
        v, _, _ = smp_polytope(inst)
        brute = {incidence(inst, mu) for mu in enumerate_stable(inst)}
        fails += not (eq.ok and {tuple(int(x) for x in p) for p in v.vertices} == brute)
    rep.result = {"instances": len(sizes), "seed": args.seed, "failures": fails}
    rep.check("equivalence and vertex sets on every instance", fails == 0)


REPRODUCE: dict[str, Callable] = {
    "thm-tradeoff-n6": rep_tradeoff,
    "prop-minupdown-vs-hansen": rep_minupdown_hansen,
    "fig2-matroid": rep_sample_tree,
    "q4-spanning-trees": rep_q4,
    "k2n-forests": rep_forests,
    "three-level": rep_three_level,
    "frac-stab": rep_frac_stab,
    "appendixF": rep_integer_hull,
    "marriage-equivalence": rep_marriage,
}


def cmd_reproduce(args, rep: Report):
    fn = REPRODUCE.get(args.id)
    if fn is None:
        raise InputError(f"unknown reproduce id {args.id!r}; known: {', '.join(sorted(REPRODUCE))}")
    fn(args, rep)


# ---------------------------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, default):
    p.add_argument("--max-dim", type=int, default=default, help="dimension guard for facet enumeration")
    p.add_argument("--extended", action="store_true", default=default, help="allow long-running computations")
    p.add_argument("--seed", type=int, default=default, help="seed for randomized corpora")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twolevel", description="Exact checks on 2-level polytopes.")
    _global_flags(p, argparse.SUPPRESS)
    p.set_defaults(max_dim=None, extended=False, seed=0)
    # the same flags are accepted after the subcommand too
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    f = add("family", help="build a named family member")
    f.add_argument("name")
    f.add_argument("params", nargs="?", default=None, help="JSON text or file")
    f.set_defaults(func=cmd_family)
    for name, fn in (("check", cmd_check), ("two-level", cmd_two_level), ("edges", cmd_edges)):
        s = add(name)
        s.add_argument("path")
        s.set_defaults(func=fn)
    for name, fn in (("matroid-tree", cmd_matroid_tree), ("cycle", cmd_cycle), ("cut", cmd_cut),
                     ("matching", cmd_matching)):
        s = add(name)
        s.add_argument("path")
        s.set_defaults(func=fn)
    r = add("reproduce")
    r.add_argument("id")
    r.set_defaults(func=cmd_reproduce)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    params = {k: v for k, v in vars(args).items() if k not in ("func", "command", "params")}
    rep = Report(args.command, params)
    start = time.perf_counter()
    old = get_max_dim()
    try:
        if args.max_dim is not None:
            if args.max_dim < 0:
                raise InputError("--max-dim must be nonnegative")
            set_max_dim(args.max_dim)
        args.func(args, rep)
        code = EXIT_OK if rep.ok else EXIT_ASSERT
    except VerificationError as exc:
        rep.check("internal verification", False, str(exc))
        code = EXIT_ASSERT
    except (InputError, SizeGuardExceeded, TwoLevelError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INPUT
    finally:
        set_max_dim(old)
    print(io.dumps(rep.as_dict()), file=out)
    print(f"wall time: {time.perf_counter() - start:.3f}s", file=err)
    return code


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser", "REPRODUCE", "Report"]
