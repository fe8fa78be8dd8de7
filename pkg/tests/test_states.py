"""Admissible states, edge-generator actions and projector identities."""

from fractions import Fraction
from itertools import product

import pytest

from slndeform.cyclotomic import CycloField
from slndeform.diagram import parse_pd
from slndeform.errors import SizeBoundError
from slndeform.fixtures import fixture, fixture_names
from slndeform.potential import admissible_tuple, u1_poly, u2_poly
from slndeform.resolution import resolve
from slndeform.states import (
    StateAlgebra,
    enumerate_admissible,
    generator_action,
    idempotent,
    iter_raw_states,
    verify_projector_identities,
)


def _brute_force_states(r, n):
    """Oracle: filter all n^(#thin) states by the thick-edge condition."""
    pos = {t: i for i, t in enumerate(r.thin_edges)}
    out = []
    for raw in product(range(n), repeat=len(r.thin_edges)):
        ok = True
        for t in r.thick_edges:
            labels = tuple(raw[pos[s]] for s in t.slots)
            if not admissible_tuple(labels, n):
                ok = False
                break
        if ok:
            out.append(raw)
    return out


def test_single_circle_has_n_states():
    r = resolve(parse_pd("U"), ())
    for n in (2, 3, 5):
        assert len(enumerate_admissible(r, n)) == n


def test_closed_thick_edge_has_n_times_n_minus_1_states():
    r = resolve(fixture("unknot_kink_pos"), (1,))
    for n in (2, 3, 4):
        assert len(enumerate_admissible(r, n)) == n * (n - 1)


def test_hopf_all_one_has_four_states_for_n2():
    r = resolve(fixture("hopf_pos"), (1, 1))
    assert len(enumerate_admissible(r, 2)) == 4


def test_enumeration_matches_brute_force_oracle():
    for name in fixture_names():
        d = fixture(name)
        for n in (2, 3):
            for choice in product((0, 1), repeat=len(d.crossings)):
                r = resolve(d, choice)
                if len(r.thin_edges) > 10:
                    continue
                fast = list(enumerate_admissible(r, n))
                assert fast == _brute_force_states(r, n)
                assert fast == sorted(fast)  # deterministic lexicographic order


def test_generator_action_on_single_circle():
    r = resolve(parse_pd("U"), ())
    x = generator_action(-1, r, 2, Fraction(1))
    fld = CycloField(2)
    assert x.values == (fld.one, -fld.one)


def test_generator_action_unknown_edge():
    r = resolve(parse_pd("U"), ())
    with pytest.raises(KeyError):
        generator_action(99, r, 2)


def test_generator_power_n_is_beta_power_n():
    for name, choice in (("unknot_kink_pos", (1,)), ("hopf_pos", (1, 1))):
        r = resolve(fixture(name), choice)
        for n in (2, 3):
            for beta in (Fraction(1), Fraction(2), Fraction(-3)):
                algebra = StateAlgebra(r, n, beta)
                for e in r.thin_edges:
                    x = algebra.generator_action(e)
                    assert x**n == algebra.constant(beta**n)


def test_thick_edge_relations_act_as_zero():
    """The four defining relations vanish on the semisimple model."""
    for name, choice in (("unknot_kink_pos", (1,)), ("hopf_pos", (1, 1))):
        r = resolve(fixture(name), choice)
        for n in (2, 3):
            beta = Fraction(2)
            algebra = StateAlgebra(r, n, beta)
            shift = algebra.constant((n + 1) * beta**n)
            for t in r.thick_edges:
                x1, x2, x3, x4 = (algebra.generator_action(s) for s in t.slots)
                assert (x1 + x2 - x3 - x4).is_zero
                assert (x1 * x2 - x3 * x4).is_zero
                values = {"x1": x1, "x2": x2, "x3": x3, "x4": x4}
                assert (u1_poly(n).evaluate(values) - shift).is_zero
                u2val = u2_poly(n).evaluate(values)
                assert (u2val * algebra.one).is_zero


def test_idempotent_is_indicator_for_admissible_states():
    r = resolve(fixture("hopf_pos"), (1, 1))
    algebra = StateAlgebra(r, 2, Fraction(1))
    for phi in algebra.states:
        q = algebra.idempotent(phi)
        assert q(phi) == 1
        for psi in algebra.states:
            if psi != phi:
                assert q(psi).is_zero


def test_idempotent_vanishes_for_non_admissible_states():
    r = resolve(fixture("unknot_kink_pos"), (1,))
    algebra = StateAlgebra(r, 3, Fraction(1))
    constant_state = (1, 1)  # equal labels violate the thick-edge condition
    assert constant_state not in algebra.index
    assert algebra.idempotent(constant_state).is_zero


def test_idempotent_n2_circle_formula():
    # Q for the label-0 state of a single circle is (1 + X/beta)/2
    r = resolve(parse_pd("U"), ())
    for beta in (Fraction(1), Fraction(3)):
        algebra = StateAlgebra(r, 2, beta)
        x = algebra.generator_action(-1)
        explicit = (algebra.one + x * (1 / beta)) * Fraction(1, 2)
        q = algebra.idempotent((0,))
        assert q == explicit
        assert q.values == (algebra.field.one, algebra.field.zero)


def test_idempotent_rejects_wrong_length():
    r = resolve(parse_pd("U"), ())
    with pytest.raises(ValueError):
        idempotent((0, 1), r, 2)


def test_projector_identities_on_circles():
    r = resolve(parse_pd("U"), ())
    for n in (2, 3, 4, 5):
        rep = verify_projector_identities(r, n)
        assert rep.passed
        assert rep.raw_count == n and rep.admissible_count == n


def test_projector_identities_on_hopf_all_one():
    r = resolve(fixture("hopf_pos"), (1, 1))
    rep = verify_projector_identities(r, 2, Fraction(1))
    assert rep.passed
    assert rep.raw_count == 16
    assert rep.admissible_count == 4
    assert rep.vanishing_count == 12


def test_projector_sum_over_admissible_states_is_one():
    r = resolve(fixture("hopf_pos"), (1, 1))
    algebra = StateAlgebra(r, 2, Fraction(2))
    total = algebra.zero
    for phi in algebra.states:
        total = total + algebra.idempotent(phi)
    assert total == algebra.one


def test_raw_state_gate():
    r = resolve(fixture("figure_eight"), (1, 1, 1, 1))
    with pytest.raises(SizeBoundError):
        list(iter_raw_states(r, 3, max_raw_states=100))
    with pytest.raises(SizeBoundError):
        verify_projector_identities(r, 3, max_raw_states=100)


def test_state_algebra_rejects_zero_beta():
    r = resolve(parse_pd("U"), ())
    with pytest.raises(ValueError):
        StateAlgebra(r, 2, Fraction(0))
