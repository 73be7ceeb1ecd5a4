import pytest
from hypothesis import given

from salcom.errors import UsageError
from salcom.signs import SignVector, compose, leq, negate, parse_many, separator

from conftest import A, B, C, H, Hp, sv
from strategies import sign_vector_pairs, sign_vector_triples


def test_parse_round_trip():
    for text in ["", "0", "+-0", "--++00"]:
        assert str(SignVector.parse(text)) == text


def test_parse_rejects_bad_characters():
    with pytest.raises(UsageError):
        SignVector.parse("+x-")


def test_masks_must_be_disjoint_and_in_range():
    with pytest.raises(UsageError):
        SignVector(2, 1, 1)
    with pytest.raises(UsageError):
        SignVector(2, 4, 0)


def test_from_signs_keeps_trailing_zeros():
    assert SignVector.from_signs([1, 0, 0]) == sv("+00")
    assert len(SignVector.from_signs([0, 0])) == 2


def test_compose_examples():
    assert compose(sv("0-"), sv("++")) == sv("+-")
    assert compose(sv("--"), sv("0+")) == sv("--")
    assert sv("+0-").compose(sv("0+0")) == sv("++-")


def test_negate_examples():
    assert negate(sv("+0-")) == sv("-0+")
    assert -sv("00") == sv("00")


def test_separator_examples():
    assert separator(sv("--"), sv("++")) == {0, 1}
    assert separator(sv("0-"), sv("+-")) == frozenset()


def test_leq_examples():
    assert leq(H, B)
    assert not leq(B, H)
    assert leq(Hp, B) and leq(Hp, C) and not leq(Hp, A)


def test_length_mismatch_is_a_usage_error():
    with pytest.raises(UsageError):
        sv("+").compose(sv("++"))


def test_canonical_order_is_lexicographic_minus_zero_plus():
    order = sorted([C, Hp, B, H, A], key=SignVector.sort_key)
    assert order == [A, H, B, Hp, C]


def test_parse_many_skips_blank_and_comment_lines():
    got = parse_many(["# header", "", " +- ", "00"])
    assert got == [sv("+-"), sv("00")]


def test_restrict():
    assert sv("+0-+").restrict([0, 2]) == sv("+-")


@given(sign_vector_pairs())
def test_compose_is_idempotent_and_absorbing(pair):
    x, y = pair
    assert x.compose(x) == x
    assert x.compose(y).compose(y) == x.compose(y)
    assert x.leq(x.compose(y))


@given(sign_vector_triples())
def test_compose_is_associative(t):
    x, y, z = t
    assert x.compose(y).compose(z) == x.compose(y.compose(z))


@given(sign_vector_pairs())
def test_negation_is_an_involution_commuting_with_compose(pair):
    x, y = pair
    assert -(-x) == x
    assert -(x.compose(y)) == (-x).compose(-y)


@given(sign_vector_pairs())
def test_separator_is_symmetric_and_zero_free(pair):
    x, y = pair
    sep = x.separator(y)
    assert sep == y.separator(x)
    assert x.separator(x) == frozenset()
    assert all(x[e] != 0 and x[e] == -y[e] for e in sep)
    assert sep == {e for e in range(x.n) if x[e] * y[e] < 0}


@given(sign_vector_pairs())
def test_leq_matches_composition_definition(pair):
    x, y = pair
    assert x.leq(y) == (x.compose(y) == y)


@given(sign_vector_triples())
def test_leq_is_transitive(t):
    x, y, z = t
    if x.leq(y) and y.leq(z):
        assert x.leq(z)


@given(sign_vector_pairs())
def test_string_round_trip(pair):
    x, _ = pair
    assert SignVector.parse(str(x)) == x
    assert SignVector.from_signs(list(x)) == x
