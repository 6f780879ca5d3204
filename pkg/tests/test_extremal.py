import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_spanning_trees
from twolevel.errors import BadParams, Disconnected, NonBinaryIntegerPoints, NotReduced
from twolevel.extremal import (
    ZeroOneMatrix,
    count_forests,
    cube_slack_matrix,
    forest_study,
    fractional_stab_clique,
    fractional_stab_h,
    hypercube_graph,
    integer_hull,
    integer_points,
    k2n,
    kirchhoff,
    random_lemma_matrix,
    slack_matrix_checks,
    spanning_tree_facets,
    spanning_tree_study,
    spanning_trees,
    three_level_minupdown,
    wheel,
)
from twolevel.graphs import Graph, complete, cycle, nonisomorphic_graphs, path
from twolevel.polytope import HPolytope, VPolytope, facets_of, summary


def test_three_level_small_dimensions():
    r = three_level_minupdown(3)
    assert (r.f0, r.fd1, r.product, r.bound, r.violated) == (7, 7, 49, 48, True)
    assert r.details["witness"]["a"] == [1, -1, 1] and len(r.details["witness"]["levels"]) == 3


@pytest.mark.parametrize("d,product,bound", [(4, 132, 128), (5, 336, 320), (6, 836, 768), (7, 2059, 1792)])
def test_three_level_products(d, product, bound):
    r = three_level_minupdown(d)
    assert (r.product, r.bound, r.violated) == (product, bound, True)


def test_three_level_rejects_small_d():
    with pytest.raises(BadParams):
        three_level_minupdown(2)


def test_fractional_stab():
    r = fractional_stab_clique(3)
    assert (r.f0, r.fd1) == (5, 6)
    r = fractional_stab_clique(5)
    assert (r.f0, r.fd1, r.product, r.bound, r.violated) == (22, 15, 330, 320, True)
    assert not fractional_stab_clique(4).violated
    assert len(fractional_stab_h(4).inequalities) == 10


def test_forest_study_nine():
    r = forest_study(9)
    assert (r.product, r.bound, r.violated) == (9_880_866, 9_437_184, True)
    assert r.f0_lower and r.fd1_lower


def test_forest_counts_exact():
    assert count_forests(k2n(3)) == 54
    assert forest_study(5).details["forests_exact"] == 648


def test_forest_study_bad_params():
    with pytest.raises(BadParams):
        forest_study(2)


def test_kirchhoff_known_counts():
    assert kirchhoff(complete(5)) == 125
    assert kirchhoff(cycle(6)) == 6
    assert kirchhoff(path(5)) == 1
    assert kirchhoff(hypercube_graph(3)) == 384
    assert kirchhoff(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0


@pytest.mark.parametrize(
    "g,expected",
    [(complete(4), (5, 16, 16)), (wheel(4), (7, 45, 25)), (complete(5), (9, 125, 35)), (wheel(5), (9, 121, 36)),
     (cycle(5), (4, 5, 5))],
)
def test_spanning_tree_polytopes(g, expected):
    r = spanning_tree_study(g)
    assert (r.d, r.f0, r.fd1) == expected
    assert not r.fd1_lower


def test_q4_spanning_trees():
    r = spanning_tree_study(hypercube_graph(4))
    assert r.d == 31 and r.f0 == 42_467_328
    assert r.bound == 31 * 2**32
    assert r.product >= 160_300_000_000 and r.violated


def test_spanning_tree_disconnected():
    with pytest.raises(Disconnected):
        spanning_tree_study(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_spanning_tree_facets_on_atlas():
    # criterion against direct facet enumeration of the tree polytope
    for g in nonisomorphic_graphs(5):
        if g.n < 2 or kirchhoff(g) == 0:
            continue
        v = VPolytope(len(g.edges), tuple(spanning_trees(g)))
        assert len(facets_of(v).inequalities) == spanning_tree_facets(g)


def _connected_graph(rng, n, m):
    while True:
        es = rng.sample(list(combinations(range(n), 2)), m)
        g = Graph.from_edges(n, es)
        if kirchhoff(g):
            return g


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.integers(0, 10**9))
def test_kirchhoff_matches_brute_force(n, seed):
    rng = random.Random(seed)
    m = rng.randint(0, min(12, n * (n - 1) // 2))
    es = rng.sample(list(combinations(range(n), 2)), m)
    g = Graph.from_edges(n, es)
    assert kirchhoff(g) == brute_spanning_trees(n, es) == len(spanning_trees(g))


def test_integer_points_and_hull():
    # triangle x, y >= 0, 2x + 2y <= 3 holds (0,0), (1,0), (0,1)
    h = HPolytope(2, (((-1, 0), 0), ((0, -1), 0), ((2, 2), 3)))
    assert sorted(integer_points(h)) == [(0, 0), (0, 1), (1, 0)]
    assert len(integer_hull(h, require_binary=True)) == 3
    big = HPolytope(1, (((1,), 2), ((-1,), 0)))
    with pytest.raises(NonBinaryIntegerPoints):
        integer_hull(big, require_binary=True)
    assert len(integer_hull(big)) == 2


def test_cube_slack_matrix_report():
    r = slack_matrix_checks(cube_slack_matrix(3))
    assert (r.rows, r.cols, r.rank) == (6, 8, 4)
    assert r.ones_in_rowspace and r.cone_condition
    assert r.rows_incomparable and r.cols_incomparable
    assert r.conjecture_holds


def test_all_ones_row_breaks_incomparability():
    m = cube_slack_matrix(2)
    ext = ZeroOneMatrix.of(list(m.bits) + [[1] * m.cols])
    r = slack_matrix_checks(ext)
    assert not r.rows_incomparable
    assert r.ones_in_rowspace and r.cone_condition


def test_cone_condition_can_fail():
    m = ZeroOneMatrix.of([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert slack_matrix_checks(m).cone_condition is False


def test_identity_detected():
    r = slack_matrix_checks(ZeroOneMatrix.of([[int(i == j) for j in range(4)] for i in range(4)]))
    assert r.identity is not None and r.size_bound_holds


def test_repeated_rows_rejected():
    with pytest.raises(NotReduced):
        slack_matrix_checks(ZeroOneMatrix.of([(1, 0), (1, 0)]))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**9))
def test_lemma_matrices(d, seed):
    m = random_lemma_matrix(d, random.Random(seed))
    if m.repeats():
        return
    r = slack_matrix_checks(m)
    assert r.identity is not None
    assert r.size_bound_holds
