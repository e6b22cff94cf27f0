"""The free-group word operad: reduction, substitution, enumeration counts,
group evaluation, and naturality of word images."""

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from endop.errors import IndexOutOfRange, NotAGroup, PositionOutOfRange
from endop.naturality import (
    and_monoid,
    cyclic_group,
    monoid_endomorphisms,
    symmetric_group_3,
)
from endop.operad_core import check_algebra_action, check_operad_axioms
from endop.perms import all_perms
from endop.word_operad import (
    ReducedWord,
    free_reduce,
    group_eval,
    parse_word,
    reduced_word_count,
    semigroup_eval,
    word_compose,
    word_enumerate,
    word_operad,
    word_perm_act,
)

S3 = symmetric_group_3()


def naive_reduce(letters):
    """Oracle: scan for an adjacent inverse pair, delete, repeat to fixpoint."""
    letters = list(letters)
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            if letters[k] == -letters[k + 1]:
                del letters[k : k + 2]
                changed = True
                break
    return tuple(letters)


def test_free_reduce_examples():
    assert free_reduce([1, -1], 1).letters == ()
    assert free_reduce([1, 2, -2, 1], 2).letters == (1, 1)
    w = free_reduce([1, -2], 2)
    assert free_reduce(w.letters, 2) == w  # idempotent
    with pytest.raises(IndexOutOfRange):
        free_reduce([3], 2)
    with pytest.raises(ValueError):
        ReducedWord(1, (1, -1))


letters_strategy = st.lists(
    st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=0, max_size=12
)


@given(letters_strategy)
def test_free_reduce_matches_naive_oracle(letters):
    assert free_reduce(letters, 3).letters == naive_reduce(letters)


@given(letters_strategy)
def test_free_reduce_idempotent(letters):
    w = free_reduce(letters, 3)
    assert free_reduce(w.letters, 3) == w


def test_word_compose_examples():
    assert str(word_compose(parse_word("x1 x2", 2), 1, parse_word("x1^-1", 1))) == "x1^-1 x2"
    w = word_compose(parse_word("x1 x2 x1^-1", 2), 2, ReducedWord(0, ()))
    assert w == ReducedWord(1, ())
    # unit laws
    unit = ReducedWord(1, (1,))
    for n in (1, 2):
        for w0 in word_enumerate(n, 3):
            assert word_compose(unit, 1, w0) == w0
            for i in range(1, n + 1):
                assert word_compose(w0, i, unit) == w0
    with pytest.raises(PositionOutOfRange):
        word_compose(unit, 2, unit)


def test_word_compose_substitution_shape():
    # substitution into an inverted slot uses the inverse word
    w1 = parse_word("x1^-1", 1)
    w2 = parse_word("x1 x2", 2)
    assert str(word_compose(w1, 1, w2)) == "x2^-1 x1^-1"
    # indices above the slot shift by n - 1
    w1 = parse_word("x1 x2", 2)
    w2 = parse_word("x1 x2", 2)
    assert str(word_compose(w1, 1, w2)) == "x1 x2 x3"


def test_word_perm_act():
    w = parse_word("x1 x2^-1", 2)
    swapped = word_perm_act((2, 1), w)
    assert str(swapped) == "x2 x1^-1"
    assert word_perm_act((2, 1), swapped) == w
    assert word_perm_act((1, 2), w) == w
    with pytest.raises(Exception):
        word_perm_act((1, 1), w)


def test_word_enumerate_counts_and_order():
    words = word_enumerate(1, 2)
    assert [str(w) for w in words] == ["e", "x1", "x1^-1", "x1 x1", "x1^-1 x1^-1"]
    assert len(word_enumerate(2, 1)) == 5
    assert word_enumerate(0, 7) == [ReducedWord(0, ())]
    for n in (1, 2, 3):
        for bound in (0, 1, 2, 3):
            words = word_enumerate(n, bound)
            assert len(words) == len(set(words))
            assert all(w.letters == free_reduce(w.letters, n).letters for w in words)
            expected = sum(reduced_word_count(n, L) for L in range(bound + 1))
            assert len(words) == expected


def test_group_eval_examples():
    # x1 is the identity operation
    for g in range(6):
        assert group_eval(parse_word("x1", 1), S3, (g,)) == g
    # conjugating the 3-cycle (index 3) by the transposition (index 2)
    assert group_eval(parse_word("x1 x2 x1^-1", 2), S3, (2, 3)) == 4
    # oracle: multiply through the table directly
    expected = S3.mul(S3.mul(2, 3), S3.inverse(2))
    assert expected == 4
    # the empty word evaluates to the unit
    assert group_eval(ReducedWord(2, ()), S3, (5, 1)) == S3.unit
    with pytest.raises(NotAGroup):
        group_eval(parse_word("x1", 1), and_monoid(), (1,))


def test_word_axioms_small_bounds():
    rep = check_operad_axioms(word_operad(), 2, 2)
    assert rep.passed


@pytest.mark.slow
def test_word_axioms_full_length_three():
    rep = check_operad_axioms(word_operad(), 3, 3)
    assert rep.passed


def test_evaluation_respects_composition_on_s3():
    rep = check_algebra_action(
        word_operad(), 6, lambda w, args: group_eval(w, S3, args), 2, 2
    )
    assert rep.passed


@pytest.mark.slow
def test_evaluation_respects_composition_on_s3_length_three():
    rep = check_algebra_action(
        word_operad(), 6, lambda w, args: group_eval(w, S3, args), 2, 3
    )
    assert rep.passed


def test_word_evaluation_natural_for_all_s3_endomorphisms():
    endos = monoid_endomorphisms(S3)
    assert len(endos) == 10
    for n in (0, 1, 2):
        for w in word_enumerate(n, 3):
            for args in product(range(6), repeat=n):
                val = group_eval(w, S3, args)
                for f in endos:
                    assert group_eval(w, S3, tuple(f[a] for a in args)) == f[val]


def test_words_separated_by_evaluation_on_s3():
    """Distinct short words in two generators induce distinct maps on S3."""
    words = word_enumerate(2, 2)
    tables = {}
    for w in words:
        tbl = tuple(group_eval(w, S3, args) for args in product(range(6), repeat=2))
        assert tbl not in tables, f"{w} and {tables[tbl]} agree on S3"
        tables[tbl] = w


def test_semigroup_with_involution_action_fails_at_arity_zero_composite():
    """For the two-element max-semigroup with the identity involution the
    word action breaks on a composite that collapses through the empty word;
    the checker records the counterexample rather than guessing a fix."""
    ev = lambda w, args: semigroup_eval(w, max, lambda x: x, 0, args)
    rep = check_algebra_action(word_operad(), 2, ev, 2, 3)
    assert not rep.passed
    first = rep.first_failure()
    assert first.name == "action-composition"
    assert "o_2 e" in first.witness


def test_parse_print_round_trip():
    for n in (0, 1, 2, 3):
        for w in word_enumerate(n, 3):
            assert parse_word(str(w), n) == w
    assert parse_word("", 2) == ReducedWord(2, ())
    with pytest.raises(ValueError):
        parse_word("y1", 1)


def test_word_action_law_convention():
    # (sigma . w) evaluated at args equals w at the sigma-permuted args
    for n in (2, 3):
        for w in word_enumerate(n, 2):
            for sigma in all_perms(n):
                acted = word_perm_act(sigma, w)
                for args in product(range(6), repeat=n):
                    permuted = tuple(args[s - 1] for s in sigma)
                    assert group_eval(acted, S3, args) == group_eval(w, S3, permuted)


def test_group_eval_on_cyclic_group():
    Z6 = cyclic_group(6)
    # x1^3 is tripling
    w = free_reduce([1, 1, 1], 1)
    for g in range(6):
        assert group_eval(w, Z6, (g,)) == (3 * g) % 6
