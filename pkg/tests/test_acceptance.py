"""One test per acceptance criterion.

Each test prints a single PASS/FAIL line (also repeated in the terminal
summary) and then asserts, so a failing criterion both shows in the list
and fails the run.
"""

import io as stdio
import json
import random
import time
from functools import lru_cache

import pytest

from conftest import ACCEPTANCE_LINES, extended_enabled
from oracles import brute_facets, brute_rank
from twolevel.binary import BinaryMatroid, cographic, cut_polytope, cycle_basis, cycle_polytope, enumerate_cycles
from twolevel.cli import run
from twolevel.extremal import (
    forest_study,
    fractional_stab_clique,
    hypercube_graph,
    integer_hull,
    spanning_tree_study,
    three_level_minupdown,
)
from twolevel.families import birkhoff, hanner, hansen, min_updown, stab
from twolevel.graphs import complete, is_perfect, nonisomorphic_graphs
from twolevel.io import load_fixture
from twolevel.matching import enumerate_stable, incidence, random_instance, smp_polytope, verify_order_equivalence
from twolevel.matroids import (
    two_sum_projection_check,
    base_polytope,
    compose_tree,
    conjecture_check_matroid,
    random_tree,
    tree_description,
    uniform,
)
from twolevel.polytope import (
    VPolytope,
    convex_hull,
    equality_shape,
    facet_polytopes,
    facets_of,
    is_two_level,
    summary,
    vertices_of,
)
from twolevel.posets import chain_polytope, double_order_polytope, hibi_check, order_polytope, random_poset


def report(number, title, ok, detail, seconds, limit=None):
    timing = f"{seconds:.1f}s" + (f" (limit {limit}s)" if limit else "")
    line = f"CRITERION {number} {'PASS' if ok else 'FAIL'}: {title} | {detail} | {timing}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def cli(*argv):
    out, err = stdio.StringIO(), stdio.StringIO()
    code = run(list(argv), out, err)
    return code, json.loads(out.getvalue()) if out.getvalue() else None


# --- 1 -------------------------------------------------------------------------


def test_criterion_1_minupdown_vs_hansen():
    t = time.perf_counter()
    code, rep = cli("reproduce", "prop-minupdown-vs-hansen")
    dt = time.perf_counter() - t
    res = rep["result"]
    ok = (
        code == 0
        and rep["ok"]
        and res["P8(2)"] == {"f0": 68, "fd1": 28, "edges": 604}
        and res["Hans(P7)"] == {"f0": 68, "fd1": 28, "edges": 622}
        and dt < 30
    )
    report(1, "P8(2) 68/28/604 and Hans(P7) 68/28/622", ok, json.dumps(res, sort_keys=True), dt, 30)


# --- 2 -------------------------------------------------------------------------


def test_criterion_2_tradeoff_exhaustive():
    t = time.perf_counter()
    code, rep = cli("reproduce", "thm-tradeoff-n6")
    dt = time.perf_counter() - t
    ok = code == 0 and rep["ok"] and dt < 60
    failed = [a["name"] for a in rep["assertions"] if not a["pass"]]
    report(2, "clique/stable trade-off on all labelled graphs n <= 6", ok,
           f"graphs={rep['result']['graphs']} equality={rep['result']['equality_cases']} failed={failed}", dt, 60)


# --- 3 -------------------------------------------------------------------------


def _partitions(n, largest=None):
    largest = largest or n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


@lru_cache(None)
def _hanner_irreducible(d):
    if d == 1:
        return ("segment",)
    return tuple(f"polar({p})" for p in _hanner_products(d))


@lru_cache(None)
def _hanner_products(d):
    """Products of at least two irreducible factors, up to factor order."""
    out = []
    for parts in _partitions(d):
        if len(parts) < 2:
            continue

        def rec(i, prev, acc):
            if i == len(parts):
                out.append("product(" + ",".join(acc) + ")")
                return
            for j, e in enumerate(_hanner_irreducible(parts[i])):
                key = (parts[i], j)
                if i and parts[i] == parts[i - 1] and key < prev:
                    continue
                rec(i + 1, key, acc + [e])

        rec(0, None, [])
    return tuple(out)


def hanner_expressions(max_d):
    for d in range(1, max_d + 1):
        yield from _hanner_irreducible(d) + _hanner_products(d)


class FamilyTally:
    def __init__(self):
        self.counts = {}
        self.bad = []

    def add(self, family, v, s=None):
        s = s or summary(v)
        self.counts[family] = self.counts.get(family, 0) + 1
        if not is_two_level(v)[0] or not s.satisfies:
            self.bad.append((family, s))
        elif s.equality and equality_shape(v) is None:
            self.bad.append((family, "equality outside cube/cross-polytope", s))


def test_criterion_3_family_suite():
    t = time.perf_counter()
    tally = FamilyTally()
    perfect = [g for g in nonisomorphic_graphs(6) if is_perfect(g)]
    for g in perfect:
        tally.add("stab", stab(g)[0])
        v, s = hansen(g)
        tally.add("hansen", v, s)
    for d in range(2, 10):
        for l in range(1, d):
            tally.add("minupdown", min_updown(d, l)[0])
    for n in range(2, 5):
        v, s = birkhoff(n)
        tally.add("birkhoff", v, s)
    for e in hanner_expressions(8):
        v, s = hanner(e)
        tally.add("hanner", v, s)
    rng = random.Random(2024)
    for _ in range(200):
        p = random_poset(rng.randint(1, 6), rng.choice([0.2, 0.35, 0.5]), rng)
        tally.add("order", order_polytope(p)[0])
        tally.add("chain", chain_polytope(p)[0])
        v, s = double_order_polytope(p)
        tally.add("double-order", v, s)
    rng = random.Random(7)
    for _ in range(60):
        tr = random_tree(rng, 4, 12)
        v = base_polytope(compose_tree(tr))
        tally.add("matroid-tree", v, conjecture_check_matroid(tr))
    rng = random.Random(11)
    not_two_level = 0
    while tally.counts.get("cycle", 0) < 40:
        d = rng.randint(3, 10)
        m = BinaryMatroid(d, tuple(rng.getrandbits(d) for _ in range(rng.randint(1, d))))
        cp = cycle_polytope(m)
        if cp.matroid.d > 10 or cp.matroid.d == 0:
            continue
        if not cp.two_level:
            # 2-level exactly when no chordless cocircuit has length >= 5
            assert cp.long_chordless
            not_two_level += 1
            continue
        assert not cp.long_chordless
        tally.add("cycle", cp.v, cp.summary)
    dt = time.perf_counter() - t
    ok = not tally.bad and dt < 600
    detail = " ".join(f"{k}={v}" for k, v in tally.counts.items()) + f" skipped_non2level_cycle={not_two_level}"
    report(3, "families are 2-level, satisfy the bound, equality only for cube/cross", ok,
           detail + (f" bad={tally.bad[:3]}" if tally.bad else ""), dt, 600)


# --- 4 -------------------------------------------------------------------------


def test_criterion_4_stable_matching_equivalence():
    t = time.perf_counter()
    rng = random.Random(0)
    sizes = [2] * 20 + [3] * 40 + [4] * 35 + [5] * 5
    fails = []
    for n in sizes:
        inst = random_instance(n, rng)
        eq = verify_order_equivalence(inst)
        v, h, _ = smp_polytope(inst, geometric=True)
        brute = {incidence(inst, mu) for mu in enumerate_stable(inst)}
        same = set(vertices_of(h).vertices) == brute == set(v.vertices)
        if not (eq.independent and eq.formula_holds and eq.image_matches and same):
            fails.append(n)
    dt = time.perf_counter() - t
    ok = not fails and len(sizes) >= 100 and dt < 120
    report(4, "rotation/order-polytope equivalence on random instances n <= 5", ok,
           f"instances={len(sizes)} failures={fails}", dt, 120)


# --- 5 -------------------------------------------------------------------------


def test_criterion_5_matroid_description():
    t = time.perf_counter()
    rng = random.Random(5)
    bad = []
    sizes = []
    for _ in range(60):
        tr = random_tree(rng, 4, 12)
        m = compose_tree(tr)
        desc = tree_description(tr, m)
        bases = [set(b) for b in m.base_sets()]
        E, k = len(m.elements), len(tr.nodes)
        sizes.append((k, E))
        if any(brute_rank(bases, F) != r for F, r in desc.cut_ranks):
            bad.append(("rank", tr.to_json()))
        if vertices_of(desc.h) != base_polytope(m):
            bad.append(("vertices", tr.to_json()))
        if len(desc.h.inequalities) > 2 * E + 2 * (k - 1):
            bad.append(("rows", tr.to_json()))
    dt = time.perf_counter() - t
    multi = sum(1 for k, _ in sizes if k > 1)
    ok = not bad and dt < 300
    report(5, "tree description: cut ranks, vertices, row count", ok,
           f"trees=60 multi_node={multi} max|E|={max(e for _, e in sizes)} bad={bad[:2]}", dt, 300)


# --- 6 -------------------------------------------------------------------------


def test_criterion_6_cycle_space():
    t = time.perf_counter()
    rng = random.Random(6)
    bad = 0
    arith = 0
    for _ in range(120):
        d = rng.randint(1, 12)
        m = BinaryMatroid(d, tuple(rng.getrandbits(d) for _ in range(rng.randint(0, d))))
        cyc = enumerate_cycles(m)
        s = set(cyc)
        if len(cyc) != 2 ** (d - m.r) or cycle_basis(m).dim != d - m.r:
            bad += 1
        if any(a ^ b not in s for a in cyc for b in cyc):
            bad += 1
        if d <= 10:
            cp = cycle_polytope(m)
            if cp.arithmetic_ok is not None:
                arith += 1
                bad += not cp.arithmetic_ok
    cut = cut_polytope(complete(4))
    k4 = (len(cut.v), len(facets_of(cut.v).inequalities))
    dt = time.perf_counter() - t
    ok = bad == 0 and k4 == (8, 16) and dt < 120
    report(6, "cycle counts 2^(d-r), closure, CUT(K4), 2T+4S bound", ok,
           f"matroids=120 arithmetic_checked={arith} CUT(K4)={k4} bad={bad}", dt, 120)


# --- 7 -------------------------------------------------------------------------


def test_criterion_7_counterexamples():
    t = time.perf_counter()
    three = [three_level_minupdown(d) for d in range(3, 11)]
    frac = fractional_stab_clique(5)
    forest = forest_study(9)
    q4 = spanning_tree_study(hypercube_graph(4))
    dt = time.perf_counter() - t
    checks = {
        "three-level all d": all(r.violated for r in three),
        "three-level d=3 49>48": (three[0].product, three[0].bound) == (49, 48),
        "frac-stab d=5 330>320": (frac.product, frac.bound, frac.violated) == (330, 320, True),
        "forests n=9": (forest.product, forest.bound, forest.violated) == (9_880_866, 9_437_184, True),
        "Q4": q4.product >= 160_300_000_000 and q4.bound == 31 * 2**32 and q4.violated,
    }
    ok = all(checks.values()) and dt < 600
    report(7, "counterexample reproductions", ok,
           f"{checks} Q4 product={q4.product} bound={q4.bound}", dt, 600)


# --- 8 -------------------------------------------------------------------------


@pytest.mark.extended
def test_criterion_8_integer_hull_fixture(request):
    if not extended_enabled(request.config):
        line = "CRITERION 8 SKIP: integer hull of the 12-dimensional fixture | set TWOLEVEL_EXTENDED=1 or --extended"
        ACCEPTANCE_LINES.append(line)
        print(line)
        pytest.skip("extended criterion")
    t = time.perf_counter()
    h = load_fixture("appendixF.json")
    v = integer_hull(h)
    s = summary(v)
    dt = time.perf_counter() - t
    ok = s.product == 535392 and s.bound == 98304 and s.product > s.bound
    report(8, "integer hull f0*fd1 = 535392 > 98304", ok, f"d={s.d} f0={s.f0} fd1={s.fd1}", dt)


# --- 9 -------------------------------------------------------------------------


def test_criterion_9_property_suites():
    t = time.perf_counter()
    rng = random.Random(9)
    round_trips = 0
    for _ in range(80):
        d = rng.randint(1, 6)
        pts = [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(rng.randint(1, 14))]
        v = convex_hull(pts)
        assert vertices_of(facets_of(v)) == v
        round_trips += 1
    for _ in range(40):
        d = rng.randint(2, 6)
        pts = {tuple(rng.randint(0, 1) for _ in range(d)) for _ in range(rng.randint(2, 2**d))}
        v = VPolytope(d, tuple(pts))
        assert vertices_of(facets_of(v)) == v
        round_trips += 1
    hibi = 0
    prng = random.Random(2024)
    for _ in range(200):
        p = random_poset(prng.randint(1, 6), prng.choice([0.2, 0.35, 0.5]), prng)
        assert hibi_check(p).holds
        hibi += 1
    pairs = 0
    for n1 in range(3, 6):
        for n2 in range(3, 11 - n1):
            for k1 in range(1, n1):
                for k2 in range(1, n2):
                    m1 = uniform(n1, k1, [f"a{i}" for i in range(n1 - 1)] + ["p"])
                    m2 = uniform(n2, k2, ["p"] + [f"b{i}" for i in range(n2 - 1)])
                    assert two_sum_projection_check(m1, m2, "p")
                    pairs += 1
    faces = 0
    generated = [stab(g)[0] for g in nonisomorphic_graphs(5) if is_perfect(g)]
    generated += [min_updown(d, l)[0] for d in range(2, 6) for l in range(1, d)]
    generated += [cut_polytope(complete(4)).v, birkhoff(3)[0]]
    for v in generated:
        if v.affine_dim > 5 or not is_two_level(v)[0]:
            continue
        for f in facet_polytopes(v):
            assert is_two_level(f)[0]
            faces += 1
    # brute-force facet oracle on a few small generated members
    for v in (g for g in generated if len(g) <= 16):
        tight = {frozenset(i for i, x in enumerate(v.vertices) if sum(a * y for a, y in zip(r[0], x)) == r[1])
                 for r in facets_of(v).inequalities}
        assert tight == brute_facets(v.vertices)
    dt = time.perf_counter() - t
    report(9, "round trips, Hibi, 2-sum projection, face heredity", True,
           f"round_trips={round_trips} hibi={hibi} projection_pairs={pairs} facets_checked={faces}", dt)
