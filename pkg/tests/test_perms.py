import pytest

from selfdual_forge.perms import (
    apply_to_word,
    closure,
    compose,
    coset,
    format_cycles,
    identity,
    inverse,
    parse_cycles,
    permutation_order,
)


def test_parse_both_notations():
    assert parse_cycles("(12)(3586)", 8) == parse_cycles("(1,2)(3,5,8,6)", 8)
    assert parse_cycles("()", 8) == identity(8)
    assert parse_cycles("(78)", 8) == (0, 1, 2, 3, 4, 5, 7, 6)


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_cycles("(19)", 8)
    with pytest.raises(ValueError):
        parse_cycles("(11)", 8)
    with pytest.raises(ValueError):
        parse_cycles("1,2", 8)


def test_format_roundtrip():
    for text in ["()", "(1,2)", "(4,5,7,8)", "(2,4,3)(5,7)(6,8)"]:
        p = parse_cycles(text, 8)
        assert parse_cycles(format_cycles(p), 8) == p


def test_compose_convention():
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(2,3)", 3)
    # compose(p, q) applies q first: 3 -> 2 -> 1
    assert compose(p, q)[2] == 0


def test_inverse():
    p = parse_cycles("(1,2,3)(4,5)", 6)
    assert compose(p, inverse(p)) == identity(6)
    assert compose(inverse(p), p) == identity(6)


def test_closure_of_transpositions_is_symmetric_group():
    gens = [parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)]
    assert len(closure(gens)) == 24


def test_coset_size_and_membership():
    group = closure([parse_cycles("(1,2)", 4)])
    c = coset(group, parse_cycles("(3,4)", 4))
    assert len(c) == 2
    assert parse_cycles("(3,4)", 4) in c
    assert parse_cycles("(1,2)(3,4)", 4) in c


def test_apply_to_word():
    p = parse_cycles("(1,3)", 4)
    assert apply_to_word(0b0001, p) == 0b0100
    assert apply_to_word(0b1010, p) == 0b1010


def test_permutation_order():
    assert permutation_order(identity(5)) == 1
    assert permutation_order(parse_cycles("(1,2,3)(4,5)", 5)) == 6
