import pytest
from hypothesis import given, settings, strategies as st

from twolevel.errors import BadParams, InputError, NotPerfect
from twolevel.graphs import Graph, complete, cycle, empty, enumerate_cliques, is_perfect, nonisomorphic_graphs, path
from twolevel.families import (
    birkhoff,
    hanner,
    hansen,
    min_updown,
    parse_hanner,
    stab,
    updown_bijection_check,
    updown_switch_check,
)
from twolevel.polytope import count_edges, facets_of, is_two_level, summary


def test_stab_c4():
    v, h = stab(cycle(4))
    s = summary(v)
    assert (s.f0, s.fd1, s.product, s.bound) == (7, 8, 56, 128)
    assert len(h.inequalities) == 8


def test_stab_empty_graph_is_cube():
    s = summary(stab(empty(3))[0])
    assert (s.f0, s.fd1, s.equality) == (8, 6, True)


def test_stab_triangle_is_simplex():
    s = summary(stab(complete(3))[0])
    assert (s.f0, s.fd1) == (4, 4)


def test_stab_facets_are_maximal_cliques_and_nonnegativity():
    v, h = stab(path(4))
    assert len(facets_of(v).inequalities) == len(h.inequalities) == 4 + 3


def test_stab_rejects_imperfect():
    with pytest.raises(NotPerfect):
        stab(cycle(5))


def test_hansen_small():
    _, s = hansen(Graph.from_edges(2, [(0, 1)]))
    assert (s.d, s.f0, s.fd1, s.equality) == (3, 6, 8, True)
    _, s = hansen(empty(2))
    assert (s.d, s.f0, s.fd1, s.equality) == (3, 8, 6, True)


def test_hansen_p7():
    v, s = hansen(path(7))
    assert (s.d, s.f0, s.fd1) == (8, 68, 28)
    assert count_edges(v) == 622


def test_min_updown_small():
    s = summary(min_updown(3, 1)[0])
    assert (s.f0, s.fd1) == (8, 6)
    s = summary(min_updown(3, 2)[0])
    assert (s.f0, s.fd1, s.equality) == (6, 8, True)


def test_min_updown_p8_2():
    v, h = min_updown(8, 2)
    s = summary(v)
    assert (s.d, s.f0, s.fd1) == (8, 68, 28)
    assert count_edges(v) == 604


def test_min_updown_bad_params():
    with pytest.raises(BadParams):
        min_updown(3, 3)


@pytest.mark.parametrize("d,l", [(d, l) for d in range(2, 8) for l in range(1, d)])
def test_updown_bijections(d, l):
    updown_bijection_check(d, l)
    updown_switch_check(d, l)


def test_birkhoff():
    _, s = birkhoff(3)
    assert (s.d, s.f0, s.fd1) == (4, 6, 9)
    _, s = birkhoff(4)
    assert (s.d, s.f0, s.fd1, s.product, s.bound) == (9, 24, 16, 384, 9 * 2**10)
    _, s = birkhoff(2)
    assert (s.d, s.f0, s.fd1) == (1, 2, 2)


def test_hanner_examples():
    _, s = hanner("segment")
    assert (s.f0, s.fd1) == (2, 2)
    _, s = hanner("product(segment,segment,segment)")
    assert (s.f0, s.fd1, s.equality) == (8, 6, True)
    _, s = hanner("polar(product(segment,segment,segment))")
    assert (s.f0, s.fd1, s.equality) == (6, 8, True)


@pytest.mark.parametrize("text", ["", "segment(", "polar(segment,segment)", "cube", "product()", "segment segment"])
def test_hanner_parse_errors(text):
    with pytest.raises(InputError):
        parse_hanner(text)


def test_stab_and_hansen_on_perfect_atlas_graphs():
    for g in nonisomorphic_graphs(5):
        if g.n == 0 or not is_perfect(g):
            continue
        v, _ = stab(g)
        assert is_two_level(v)[0]
        s = summary(v)
        assert s.f0 == len(enumerate_cliques(g.complement(), True))
        assert s.satisfies


hanner_exprs = st.recursive(
    st.just("segment"),
    lambda kids: st.one_of(
        kids.map(lambda k: f"polar({k})"),
        st.lists(kids, min_size=2, max_size=3).map(lambda ks: "product(" + ",".join(ks) + ")"),
    ),
    max_leaves=5,
)


def _counts(e):
    # products multiply vertices and add facets; polarity swaps the two
    if e.kind == "segment":
        return 2, 2
    if e.kind == "polar":
        f0, fd1 = _counts(e.children[0])
        return fd1, f0
    f0, fd1 = 1, 0
    for c in e.children:
        a, b = _counts(c)
        f0, fd1 = f0 * a, fd1 + b
    return f0, fd1


@settings(max_examples=40, deadline=None)
@given(hanner_exprs)
def test_hanner_polytopes(text):
    e = parse_hanner(text)
    if e.dim > 5:
        return
    v, s = hanner(e)
    assert is_two_level(v)[0]
    assert (s.f0, s.fd1) == _counts(e)
    assert s.satisfies
