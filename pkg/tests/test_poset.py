import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from salcom.errors import UsageError
from salcom.poset import FinitePoset, SimplicialComplex, hasse, opposite, order_complex, verify_order_iso


def chain_poset(k):
    return FinitePoset.from_relation(list(range(k)), lambda a, b: a <= b)


def antichain(k):
    return FinitePoset(list(range(k)), np.eye(k, dtype=bool))


def divisors(n):
    return FinitePoset.from_relation([d for d in range(1, n + 1) if n % d == 0], lambda a, b: b % a == 0)


@st.composite
def posets(draw, max_size=7):
    """Random posets as transitive closures of a random DAG on 0..n-1 (edges go upward)."""
    n = draw(st.integers(1, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    leq = np.eye(n, dtype=bool)
    for i, j in chosen:
        leq[i, j] = True
    for k in range(n):
        leq |= leq[:, [k]] & leq[[k], :]
    labels = draw(st.permutations(list(range(n))))
    return FinitePoset([f"p{x}" for x in labels], leq)


def test_validation_rejects_non_orders():
    with pytest.raises(UsageError, match="reflexive"):
        FinitePoset([0, 1], np.zeros((2, 2), dtype=bool))
    with pytest.raises(UsageError, match="antisymmetric"):
        FinitePoset([0, 1], np.ones((2, 2), dtype=bool))
    bad = np.eye(3, dtype=bool)
    bad[0, 1] = bad[1, 2] = True
    with pytest.raises(UsageError, match="transitive"):
        FinitePoset([0, 1, 2], bad)
    with pytest.raises(UsageError):
        FinitePoset([0, 0], np.eye(2, dtype=bool))


def test_chain_hasse_and_complex():
    p = chain_poset(3)
    assert hasse(p) == [(0, 1), (1, 2)]
    cx = order_complex(p)
    assert cx.f_vector() == [3, 3, 1]


def test_antichain_complex_is_discrete():
    cx = order_complex(antichain(4))
    assert cx.simplices == [(0,), (1,), (2,), (3,)]


def test_divisor_lattice_hasse():
    p = divisors(12)
    assert set(p.hasse_labels()) == {(1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (4, 12), (6, 12)}
    assert [p.labels[i] for i in p.maximal()] == [12]
    assert [p.labels[i] for i in p.minimal()] == [1]


def test_opposite_is_an_involution_and_preserves_the_complex():
    p = divisors(30)
    assert np.array_equal(opposite(opposite(p)).leq, p.leq)
    assert order_complex(p).labeled() == order_complex(p.opposite()).labeled()
    c = chain_poset(4)
    assert order_complex(c).labeled() == order_complex(c.opposite()).labeled()


def test_verify_order_iso():
    p = divisors(6)
    assert verify_order_iso({x: x for x in p.labels}, p, p)
    q = FinitePoset.from_relation(["a", "b", "c", "d"], lambda x, y: x == y or x == "a" or y == "d")
    assert verify_order_iso({1: "a", 2: "b", 3: "c", 6: "d"}, p, q)
    # collapsing 1 < 2 to an incomparable pair
    flat = antichain(4)
    assert not verify_order_iso({1: 0, 2: 1, 3: 2, 6: 3}, p, flat)
    with pytest.raises(UsageError):
        verify_order_iso({1: "a", 2: "a", 3: "c", 6: "d"}, p, q)
    with pytest.raises(UsageError):
        verify_order_iso({1: "a"}, p, q)


def test_induced_subposet():
    p = divisors(12).induced([2, 3, 12])
    assert p.labels == (2, 3, 12)
    assert p.le(2, 12) and not p.le(2, 3)


def test_dot_output():
    dot = chain_poset(2).to_dot("c")
    assert dot.splitlines() == ["digraph c {", "  rankdir=BT;", '  "0";', '  "1";', '  "0" -> "1";', "}"]


def test_simplicial_complex_basics():
    cx = SimplicialComplex.from_facets("abc", [(0, 1, 2)])
    assert cx.f_vector() == [3, 3, 1]
    assert cx.is_closed() and cx.euler_characteristic() == 1
    assert (2, 0) in cx
    assert not SimplicialComplex("ab", [(0, 1)]).is_closed()


@given(posets())
def test_hasse_is_the_transitive_reduction(p):
    g = nx.DiGraph()
    g.add_nodes_from(range(len(p)))
    g.add_edges_from(zip(*np.nonzero(p.strict())))
    assert set(map(tuple, nx.transitive_reduction(g).edges())) == set(p.hasse())


@given(posets())
def test_order_complex_matches_comparability_cliques(p):
    g = nx.Graph()
    g.add_nodes_from(range(len(p)))
    g.add_edges_from(zip(*np.nonzero(p.strict())))
    cliques = {tuple(sorted(c)) for c in nx.enumerate_all_cliques(g)}
    cx = order_complex(p)
    assert set(cx.simplices) == cliques
    assert cx.is_closed()


@given(posets())
def test_opposite_poset_has_the_same_order_complex(p):
    assert order_complex(p).labeled() == order_complex(opposite(p)).labeled()
    assert set(hasse(opposite(p))) == {(j, i) for i, j in hasse(p)}


@given(posets())
def test_relabelling_is_an_isomorphism(p):
    rev = {x: ("r", x) for x in p.labels}
    q = FinitePoset([rev[x] for x in reversed(p.labels)], p.leq[::-1, ::-1].copy())
    assert verify_order_iso(rev, p, q)


def test_chains_are_ordered_upward():
    p = divisors(12)
    for chain in p.chains():
        for a, b in itertools.pairwise(chain):
            assert p.leq[a, b] and a != b
