"""The projection operad against honest function composition, the generic
axiom checker, and the one-object scalar operad."""

from itertools import product

import pytest

from endop.errors import OperadMismatch, PositionOutOfRange
from endop.faults import corrupted_perm_operad, corrupted_word_operad
from endop.operad_core import (
    PermElement,
    check_algebra_action,
    check_operad_axioms,
    compose_at,
    perm_act,
    perm_compose,
    perm_operad,
    trivial_operad,
)
from endop.perms import all_perms
from endop.scalars import IntegersMod


def test_perm_defining_relations():
    p1 = PermElement(2, 1)
    p2 = PermElement(2, 2)
    assert perm_compose(p1, 1, p1) == PermElement(3, 1)
    assert perm_compose(p1, 2, p1) == PermElement(3, 1)
    assert perm_compose(p1, 2, p2) == PermElement(3, 1)
    assert perm_compose(p2, 1, p1) == PermElement(3, 3)


def test_perm_compose_matches_function_composition():
    """Oracle: compose the actual projections, tabulated over a two-element
    carrier (enough to tell any two projections apart)."""
    for m in range(1, 5):
        for n in range(1, 5):
            s = m + n - 1
            tuples = list(product(range(2), repeat=s))
            for a in range(1, m + 1):
                for b in range(1, n + 1):
                    for k in range(1, m + 1):
                        got = perm_compose(PermElement(m, a), k, PermElement(n, b))
                        assert got.arity == s
                        for args in tuples:
                            inner = args[k - 1 : k - 1 + n][b - 1]
                            outer = (args[: k - 1] + (inner,) + args[k - 1 + n :])[a - 1]
                            assert outer == args[got.index - 1]


def test_perm_element_validation():
    with pytest.raises(ValueError):
        PermElement(0, 1)
    with pytest.raises(ValueError):
        PermElement(2, 3)
    with pytest.raises(PositionOutOfRange):
        perm_compose(PermElement(2, 1), 3, PermElement(2, 1))


def test_perm_enumeration_sizes():
    P = perm_operad()
    assert P.enumerate_arity(0, 0) == []
    for n in range(1, 5):
        els = P.enumerate_arity(n, 0)
        assert len(els) == n
        assert len(set(els)) == n


def test_perm_action_transitive_and_faithful():
    for n in range(1, 5):
        for i in range(1, n + 1):
            hit = {perm_act(sigma, PermElement(n, i)).index for sigma in all_perms(n)}
            assert hit == set(range(1, n + 1))  # transitive on the index
        if n >= 2:
            for sigma in all_perms(n):
                if sigma == tuple(range(1, n + 1)):
                    continue
                moved = any(
                    perm_act(sigma, PermElement(n, i)) != PermElement(n, i)
                    for i in range(1, n + 1)
                )
                assert moved  # faithful


def test_perm_axiom_suite_passes():
    rep = check_operad_axioms(perm_operad(), 4, 0)
    assert rep.passed
    names = [c.name for c in rep.checks]
    assert names == [
        "unit-left",
        "unit-right",
        "sequential-associativity",
        "parallel-commutation",
        "symmetric-action",
        "equivariance",
    ]
    assert all(c.instances > 0 for c in rep.checks)


def test_axiom_report_json_shape():
    rep = check_operad_axioms(perm_operad(), 2, 0)
    d = rep.to_json_dict()
    assert d["operad"] == "perm"
    for c in d["checks"]:
        assert set(c) <= {"name", "instances", "pass", "witness"}
        assert c["pass"] is True


def test_compose_at_validation():
    P = perm_operad()
    assert compose_at(P, PermElement(2, 1), 2, PermElement(1, 1)) == PermElement(2, 1)
    with pytest.raises(PositionOutOfRange):
        compose_at(P, PermElement(2, 1), 0, PermElement(1, 1))
    with pytest.raises(OperadMismatch):
        compose_at(P, PermElement(2, 1), 1, "not an element")


def test_trivial_operad_is_ring_multiplication():
    Z4 = IntegersMod(4)
    T = trivial_operad(Z4)
    r, s = T.enumerate_arity(1, 0)[2], T.enumerate_arity(1, 0)[3]
    assert r.scalar.value == 2 and s.scalar.value == 3
    assert T.compose(r, 1, s).scalar.value == 2
    assert check_operad_axioms(T, 3, 0).passed
    assert T.enumerate_arity(2, 0) == []


def test_perm_action_on_finite_set():
    P = perm_operad()
    rep = check_algebra_action(P, 3, lambda w, args: w.apply(args), 3, 0)
    assert rep.passed


def test_corrupted_perm_is_caught_with_named_witness():
    rep = check_operad_axioms(corrupted_perm_operad(), 3, 0)
    assert not rep.passed
    first = rep.first_failure()
    assert first.name == "unit-right"
    assert "pi2[2] o_1 1" in first.witness


def test_corrupted_word_reduction_is_caught():
    rep = check_operad_axioms(corrupted_word_operad(), 2, 2)
    assert not rep.passed
    first = rep.first_failure()
    assert first.witness is not None
    assert first.name == "unit-left"
