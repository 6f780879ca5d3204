import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_facets
from twolevel.errors import InputError
from twolevel.graphs import Graph, complete, empty, is_perfect
from twolevel.polytope import facets_of
from twolevel.posets import (
    Poset,
    antichain,
    antichains,
    chain,
    chain_polytope,
    chains,
    closed_sets,
    comparability_graph,
    double_order_polytope,
    hibi_check,
    maximal_chains,
    order_polytope,
    random_poset,
)

VEE = Poset.from_relations(3, [(0, 2), (1, 2)])


def test_chain_sets():
    p = chain(3)
    assert closed_sets(p) == [(), (0,), (0, 1), (0, 1, 2)]
    assert len(antichains(p)) == 4
    assert maximal_chains(p) == [(0, 1, 2)]


def test_antichain_closed_sets():
    for d in range(1, 6):
        assert len(closed_sets(antichain(d))) == 2**d


def test_vee_closed_sets():
    assert closed_sets(VEE) == [(), (0,), (1,), (0, 1), (0, 1, 2)]


def test_cyclic_relation_rejected():
    with pytest.raises(InputError):
        Poset.from_relations(2, [(0, 1), (1, 0)])


def test_order_polytope_examples():
    v, h = order_polytope(antichain(3))
    assert len(v) == 8 and len(h.inequalities) == 6
    v, h = order_polytope(chain(3))
    assert len(v) == 4 and len(h.inequalities) == 4
    v, h = order_polytope(VEE)
    # two covers, two minimal elements, one maximal element
    assert len(v) == 5 and len(h.inequalities) == 5
    assert len(facets_of(v).inequalities) == 5


def test_chain_polytope_examples():
    v, h = chain_polytope(chain(3))
    assert len(v) == 4 and len(h.inequalities) == 4
    v, h = chain_polytope(antichain(3))
    assert len(v) == 8 and len(h.inequalities) == 6


def test_hibi_examples():
    assert (hibi_check(chain(3)).order_facets, hibi_check(chain(3)).chain_facets) == (4, 4)
    assert (hibi_check(antichain(3)).order_facets, hibi_check(antichain(3)).chain_facets) == (6, 6)
    r = hibi_check(VEE)
    assert r.order_facets == 5 and r.holds


def test_double_order_examples():
    v, s = double_order_polytope(chain(1))
    assert (s.f0, s.fd1) == (4, 4)
    v, s = double_order_polytope(antichain(2))
    assert s.f0 == 8


def test_comparability_graphs():
    assert comparability_graph(chain(3)) == complete(3)
    assert comparability_graph(antichain(4)) == empty(4)
    assert comparability_graph(VEE) == Graph.from_edges(3, [(0, 2), (1, 2)])


def test_random_poset_seeded():
    a = random_poset(6, 0.4, random.Random(5))
    b = random_poset(6, 0.4, random.Random(5))
    assert a == b


posets = st.integers(1, 6).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda r: r[0] < r[1])).map(
        lambda rel: Poset.from_relations(n, rel)
    )
)


@settings(max_examples=80, deadline=None)
@given(posets)
def test_closed_sets_biject_with_antichains(p):
    # maximal elements of a down-set form an antichain, and vice versa
    assert len(closed_sets(p)) == len(antichains(p))


@settings(max_examples=40, deadline=None)
@given(posets.filter(lambda p: p.n <= 4))
def test_order_and_chain_descriptions_match_oracle(p):
    for build in (order_polytope, chain_polytope):
        v, h = build(p)
        tight = {frozenset(i for i, x in enumerate(v.vertices) if sum(a * y for a, y in zip(r[0], x)) == r[1])
                 for r in h.inequalities}
        assert tight == brute_facets(v.vertices)


@settings(max_examples=60, deadline=None)
@given(posets)
def test_hibi_and_perfectness(p):
    assert hibi_check(p).holds
    assert is_perfect(comparability_graph(p))


@settings(max_examples=30, deadline=None)
@given(posets.filter(lambda p: p.n <= 5))
def test_double_order_counts(p):
    _, s = double_order_polytope(p)
    assert s.f0 == 2 * len(antichains(p))
    assert s.fd1 == 2 * len(chains(p, True))
