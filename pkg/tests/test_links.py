"""Larger links: the collapse depends only on linking numbers.

The Whitehead link and the Borromean rings are topologically nontrivial but
have vanishing pairwise linking numbers, so their homology must sit
entirely in degree 0 with the full n^l dimension; the (2,4)-torus link has
linking number 2 and puts its bicolored generators in degree 4.
"""

import pytest

from slndeform.diagram import linking_matrix, parse, writhe
from slndeform.homology import cross_validate

WHITEHEAD = "X[6,1,7,2] X[10,7,5,8] X[4,5,1,6] X[2,10,3,9] X[8,4,9,3]"
TORUS_2_4 = "X[6,1,7,2] X[8,3,5,4] X[2,5,3,6] X[4,7,1,8]"
# closure of the braid (s1 s2^-1)^3, written in the signed format
BORROMEAN = ("C[+;2,1,4,5] C[-;5,3,6,7] C[+;7,4,8,9] "
             "C[-;9,6,10,11] C[+;11,8,1,13] C[-;13,10,3,2]")
# A-B-C chain of two positive clasps: lk(A,B) = lk(B,C) = 1, lk(A,C) = 0
CHAIN3 = "X[1,3,2,4] X[4,2,5,1] X[5,8,6,7] X[7,6,8,3]"


def test_whitehead_link_collapses_to_degree_zero():
    d = parse(WHITEHEAD)
    assert d.component_count == 2
    assert linking_matrix(d) == ((0, 0), (0, 0))
    for n in (2, 3):
        rep = cross_validate(d, n)
        assert rep.passed, rep.messages
        assert rep.computed.dims == {0: n * n}


def test_torus_2_4_link_degrees():
    d = parse(TORUS_2_4)
    assert d.component_count == 2
    assert writhe(d) == 4
    assert linking_matrix(d) == ((0, 2), (2, 0))
    for n in (2, 3):
        rep = cross_validate(d, n)
        assert rep.passed, rep.messages
        assert rep.computed.dims == {0: n, 4: n * (n - 1)}


@pytest.mark.parametrize("n,total", [(2, 8), (3, 27)])
def test_borromean_rings_collapse(n, total):
    d = parse(BORROMEAN)
    assert d.component_count == 3
    assert writhe(d) == 0
    assert linking_matrix(d) == ((0, 0, 0), (0, 0, 0), (0, 0, 0))
    rep = cross_validate(d, n)
    assert rep.passed, rep.messages
    assert rep.computed.dims == {0: total}


def test_three_component_chain_degree_table():
    # degree of a coloring is 2([psiA != psiB] + [psiB != psiC]); counting
    # colorings by hand gives {0: n, 2: 2n(n-1), 4: n(n-1)^2}
    d = parse(CHAIN3)
    assert d.component_count == 3
    assert linking_matrix(d) == ((0, 1, 0), (1, 0, 1), (0, 1, 0))
    for n in (2, 3):
        rep = cross_validate(d, n)
        assert rep.passed, rep.messages
        assert rep.computed.dims == {
            0: n, 2: 2 * n * (n - 1), 4: n * (n - 1) ** 2
        }
