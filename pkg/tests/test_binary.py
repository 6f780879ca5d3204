import random

import pytest
from hypothesis import given, settings, strategies as st

from twolevel.binary import (
    BinaryMatroid,
    circuits,
    cocircuits,
    cographic,
    cut_polytope,
    cycle_basis,
    cycle_polytope,
    dual,
    enumerate_cycles,
    from_graph,
    preprocess,
)
from twolevel.errors import InputError
from twolevel.graphs import complete, cycle
from twolevel.polytope import facets_of


def brute_cycles(m):
    """Subsets x with even overlap with every row, by scanning all 2^d."""
    return sorted(x for x in range(1 << m.d) if all((x & r).bit_count() % 2 == 0 for r in m.rows))


def brute_cocircuits(m):
    space = {0}
    for r in m.rows:
        space |= {s ^ r for s in space}
    nz = [s for s in space if s]
    return sorted(s for s in nz if not any(t != s and t & s == t for t in nz))


def random_matroid(rng, d):
    r = rng.randint(0, d)
    return BinaryMatroid(d, tuple(rng.getrandbits(d) for _ in range(r)))


def test_k4_ranks():
    assert (from_graph(complete(4)).d, from_graph(complete(4)).r) == (6, 3)
    assert (cographic(complete(4)).d, cographic(complete(4)).r) == (6, 3)


def test_k4_cycles():
    cyc = enumerate_cycles(from_graph(complete(4)))
    sizes = sorted(c.bit_count() for c in cyc)
    assert sizes == [0, 3, 3, 3, 3, 4, 4, 4]
    assert len(enumerate_cycles(cographic(complete(4)))) == 8


def test_identity_matrix():
    m = BinaryMatroid.from_bits(["100", "010", "001"])
    assert enumerate_cycles(m) == [0]
    assert circuits(m) == []
    assert sorted(cocircuits(m)) == [1, 2, 4]


def test_preprocess():
    m = BinaryMatroid.from_bits(["1100", "0011"])
    # columns 0,1 are parallel cocircuit pair in a rank-2 matroid on 4 elements
    p = preprocess(m)
    assert p.d < m.d
    with_coloop = BinaryMatroid.from_bits(["1000", "0110"])
    assert preprocess(with_coloop).d < 4
    k4 = cographic(complete(4))
    assert preprocess(k4) == k4


def test_cut_k4():
    cp = cut_polytope(complete(4))
    s = cp.summary
    assert (s.f0, s.fd1, s.d, s.product) == (8, 16, 6, 128)
    assert s.product <= 6 * 2**7
    assert len(facets_of(cp.v).inequalities) == 16
    assert cp.two_level


def test_triangle_graphic():
    cp = cycle_polytope(from_graph(cycle(3)))
    assert len(cp.v) == 2


def test_cographic_c5_not_two_level():
    cp = cut_polytope(cycle(5))
    assert not cp.two_level
    assert any(c.bit_count() == 5 for c in cp.long_chordless)


def test_dual_involution():
    m = from_graph(complete(4))
    assert dual(dual(m)) == m


def test_bad_bits():
    with pytest.raises(InputError):
        BinaryMatroid.from_bits(["10", "1"])
    with pytest.raises(InputError):
        BinaryMatroid.from_bits(["12"])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10**9))
def test_cycle_space_laws(d, seed):
    m = random_matroid(random.Random(seed), d)
    cyc = enumerate_cycles(m)
    assert len(cyc) == 2 ** (d - m.r) == 2 ** cycle_basis(m).dim
    assert sorted(cyc) == brute_cycles(m)
    s = set(cyc)
    assert all(a ^ b in s for a in cyc for b in cyc)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10**9))
def test_cocircuits_match_oracle(d, seed):
    m = random_matroid(random.Random(seed), d)
    assert sorted(cocircuits(m)) == brute_cocircuits(m)
    assert sorted(circuits(m)) == brute_cocircuits(dual(m))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10**9))
def test_cycle_polytope_arithmetic(d, seed):
    m = random_matroid(random.Random(seed), d)
    cp = cycle_polytope(m)
    if cp.two_level and cp.matroid.d >= 4:
        assert cp.arithmetic_ok
    if cp.two_level:
        assert cp.summary.satisfies
