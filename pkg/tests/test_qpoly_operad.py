"""The q-power polynomial operad: substitution closure, the generator
presentation, truncated-ring evaluation, and the linearity classification."""

import random
from itertools import product

import pytest

from endop.errors import CapTooSmall, FieldMismatch, MalformedTree, PositionOutOfRange
from endop.operad_core import check_operad_axioms
from endop.qpoly_operad import (
    FieldPolynomial,
    QPolynomial,
    TreeLeaf,
    TreeMu,
    TreePq,
    TruncatedSymElement,
    characterize_multilinear,
    enumerate_trees,
    eval_poly,
    generated_submonomials,
    is_q_power,
    monomial_tree,
    multilinearity_check,
    qpoly_compose,
    qpoly_from_tree,
    qpoly_operad,
    qpoly_perm_act,
    rewrite_once,
    syntactic_q_power_criterion,
)
from endop.scalars import finite_field

F2 = finite_field(2)
F3 = finite_field(3)
F4 = finite_field(4)


def test_is_q_power():
    assert [e for e in range(1, 20) if is_q_power(e, 2)] == [1, 2, 4, 8, 16]
    assert [e for e in range(1, 30) if is_q_power(e, 3)] == [1, 3, 9, 27]
    assert not is_q_power(0, 2)
    assert not is_q_power(2, 4)  # powers of q, not merely of p


def test_qpolynomial_invariant_enforced():
    QPolynomial.monomial(F2, (2, 1))  # fine
    with pytest.raises(ValueError):
        QPolynomial.monomial(F2, (3,))
    with pytest.raises(ValueError):
        QPolynomial.monomial(F2, (1, 0))  # a variable is missing
    with pytest.raises(ValueError):
        QPolynomial.monomial(F4, (2, 1))  # 2 = p is not a power of q = 4


def test_compose_examples():
    for q, F in ((2, F2), (3, F3), (4, F4)):
        x1x2 = QPolynomial.monomial(F, (1, 1))
        x1q = QPolynomial.monomial(F, (q,))
        assert qpoly_compose(x1x2, 1, x1q) == QPolynomial.monomial(F, (q, 1))
        # the product of q-th powers is the q-th power of the product
        assert qpoly_compose(x1q, 1, x1x2) == QPolynomial.monomial(F, (q, q))
    with pytest.raises(PositionOutOfRange):
        qpoly_compose(QPolynomial.monomial(F2, (1,)), 2, QPolynomial.monomial(F2, (1,)))
    with pytest.raises(FieldMismatch):
        qpoly_compose(QPolynomial.monomial(F2, (1,)), 1, QPolynomial.monomial(F3, (1,)))


def test_compose_multi_monomial_uses_frobenius():
    # (X1^q) o ((g+1) X1 X2): coefficients ride through the q-power map
    g = F4.generator()
    f = QPolynomial.monomial(F4, (4,))
    s = QPolynomial.from_terms(F4, 2, {(1, 1): g})
    out = qpoly_compose(f, 1, s)
    assert out == QPolynomial.from_terms(F4, 2, {(4, 4): g ** 4})
    assert g ** 4 == g  # coefficient Frobenius is the identity on F_q itself


def test_compose_closure_exhaustive():
    for q, F in ((2, F2), (3, F3), (4, F4)):
        exps = (1, q, q * q)
        monos = [QPolynomial.monomial(F, (e,)) for e in exps]
        monos += [QPolynomial.monomial(F, (e1, e2)) for e1 in exps for e2 in exps]
        for f in monos:
            for g in monos:
                for i in range(1, f.arity + 1):
                    h = qpoly_compose(f, i, g)
                    for exp, coeff in h.terms:
                        assert all(is_q_power(e, q) for e in exp)
                        assert not coeff.is_zero()


def test_unit_and_axioms():
    P = qpoly_operad(F2)
    rep = check_operad_axioms(P, 2, 1)
    assert rep.passed
    rep = check_operad_axioms(qpoly_operad(F3), 2, 1)
    assert rep.passed


def test_perm_act_moves_variables():
    f = QPolynomial.monomial(F2, (2, 1))
    assert qpoly_perm_act((2, 1), f) == QPolynomial.monomial(F2, (1, 2))


def test_from_tree_examples():
    assert qpoly_from_tree(TreeLeaf(1), F2) == QPolynomial.monomial(F2, (1,))
    assert qpoly_from_tree(TreeMu(TreeLeaf(1), TreeLeaf(2)), F2) == QPolynomial.monomial(
        F2, (1, 1)
    )
    both = TreeMu(TreePq(TreeLeaf(1)), TreePq(TreeLeaf(2)))
    after = TreePq(TreeMu(TreeLeaf(1), TreeLeaf(2)))
    assert qpoly_from_tree(both, F2) == qpoly_from_tree(after, F2) == QPolynomial.monomial(F2, (2, 2))
    with pytest.raises(MalformedTree):
        qpoly_from_tree(TreeMu(TreeLeaf(1), TreeLeaf(1)), F2)
    with pytest.raises(MalformedTree):
        qpoly_from_tree(TreeMu(TreeLeaf(1), TreeLeaf(3)), F2)


def test_generated_submonomials():
    pairs = generated_submonomials(1, 2, F2)
    assert [str(m) for m, _ in pairs] == ["X1", "X1^2"]
    pairs = generated_submonomials(2, 2, F2)
    assert {str(m) for m, _ in pairs} == {"X1*X2", "X1^2*X2", "X1*X2^2", "X1^2*X2^2"}
    pairs = generated_submonomials(3, 1, F2)
    assert len(pairs) == 1 and str(pairs[0][1]) == "mu(mu(1,2),3)"
    with pytest.raises(ValueError):
        generated_submonomials(1, 3, F2)
    # every q-power monomial within bounds is hit (presentation is onto)
    for q, F in ((2, F2), (3, F3)):
        pairs = generated_submonomials(2, q * q, F)
        got = {tuple(exp for exp, _ in m.terms)[0] for m, _ in pairs}
        want = {(e1, e2) for e1 in (1, q, q * q) for e2 in (1, q, q * q)}
        assert got == want


def test_presentation_relations_sound_on_small_trees():
    """Rewriting by any presented relation never changes the polynomial."""
    for F in (F2, F3):
        for n in (1, 2, 3):
            count = 0
            for tree in enumerate_trees(n, 5 - n):
                value = qpoly_from_tree(tree, F)
                for other in rewrite_once(tree):
                    count += 1
                    assert qpoly_from_tree(other, F) == value
            if n >= 2:
                assert count > 0  # arity one has no mu node to rewrite


def test_monomial_tree_witnesses():
    for heights in product(range(3), repeat=2):
        t = monomial_tree(heights)
        assert qpoly_from_tree(t, F3) == QPolynomial.monomial(F3, tuple(3 ** h for h in heights))


def test_eval_poly_examples():
    e1 = TruncatedSymElement.generator(F2, 2, 2, 1)
    e2 = TruncatedSymElement.generator(F2, 2, 2, 2)
    f = FieldPolynomial.variable(F2, 1, 1)
    assert eval_poly(f, [e1]) == e1
    prod_poly = FieldPolynomial.monomial(F2, (1, 1))
    assert eval_poly(prod_poly, [e1, e2]) == e1 * e2
    # char 2: the cross term of the square vanishes
    sq = FieldPolynomial.monomial(F2, (2,))
    assert eval_poly(sq, [e1 + e2]) == e1 * e1 + e2 * e2


def test_truncation_drops_high_degrees():
    e1 = TruncatedSymElement.generator(F2, 1, 2, 1)
    cube = e1 * e1 * e1
    assert cube == TruncatedSymElement.zero(F2, 1, 2)
    with pytest.raises(Exception):
        e1 + TruncatedSymElement.generator(F2, 1, 3, 1)


def test_multilinearity_verdicts():
    assert multilinearity_check(FieldPolynomial.monomial(F2, (1, 1))).multilinear
    assert multilinearity_check(FieldPolynomial.monomial(F4, (1, 1))).multilinear
    assert multilinearity_check(FieldPolynomial.monomial(F2, (2,))).multilinear
    v = multilinearity_check(FieldPolynomial.monomial(F4, (2,)))
    assert not v.multilinear and "homogeneity" in v.witness
    v = multilinearity_check(FieldPolynomial.monomial(F2, (3,)))
    assert not v.multilinear and "additivity" in v.witness
    with pytest.raises(CapTooSmall):
        multilinearity_check(FieldPolynomial.monomial(F2, (3,)), cap=1)


def test_characterize_multilinear_frozen_sets():
    cases = {
        (2, 1, 4): {"X1", "X1^2", "X1^4"},
        (3, 1, 9): {"X1", "X1^3", "X1^9"},
        (4, 1, 4): {"X1", "X1^4"},
        (2, 2, 4): {"X1*X2", "X1^2*X2", "X1*X2^2", "X1^2*X2^2"},
    }
    for (q, n, maxdeg), expected in cases.items():
        good, bad = characterize_multilinear(n, maxdeg, finite_field(q))
        assert {str(m) for m in good} == expected
        assert all(
            not syntactic_q_power_criterion(next(iter(m.terms)), q) for m in bad
        )


def test_frobenius_compatibility_of_evaluation():
    rng = random.Random(5)
    for F in (F2, F3):
        q = F.q
        cap = 2 * q * q
        gens = [TruncatedSymElement.generator(F, 2, cap, i) for i in (1, 2)]
        for _ in range(6):
            exp = (rng.choice((1, q)), rng.choice((1, q)))
            f = FieldPolynomial.monomial(F, exp)
            fq = f ** q
            args = [gens[0] + gens[1], gens[rng.randrange(2)]]
            assert eval_poly(fq, args) == eval_poly(f, args) ** q


def test_print_parse_round_trip():
    samples = [
        QPolynomial.monomial(F2, (2, 1)),
        QPolynomial.from_terms(F4, 2, {(1, 4): F4.generator(), (4, 4): F4.one()}),
        QPolynomial.from_terms(
            F4, 1, {(1,): F4.generator() + F4.one(), (4,): F4.one()}
        ),
    ]
    for f in samples:
        assert QPolynomial.parse(f.field, f.arity, str(f)) == f
    assert str(FieldPolynomial(F2, 1, {})) == "0"
    assert FieldPolynomial.parse(F2, 1, "0").is_zero()
