import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import WORKED, literal_runs
from lyndon_runs.oracle import (
    OracleLimitError,
    is_lyndon,
    is_lyndon_by_suffixes,
    minimal_period,
    oracle_lce,
    oracle_nss,
    oracle_runs,
)
from lyndon_runs.runs_enum import Direction
from lyndon_runs.text_core import OrderSpec, Text

ternary = st.text(alphabet="abc", max_size=24).map(lambda s: s.encode())


@pytest.mark.parametrize(
    "s, want",
    [(b"banana", [2, 4, 4, 6, 6, 7]), (b"cba", [2, 3, 4]), (b"abc", [4, 4, 4]), (b"a", [2]), (b"", [])],
)
def test_oracle_nss_examples(s, want):
    assert oracle_nss(Text(s)) == want


def test_oracle_nss_reversed_order():
    # with c < b < a every suffix of "abc" is larger than the next one
    assert oracle_nss(Text(b"abc"), OrderSpec.reversed_order()) == [2, 3, 4]


def test_oracle_lce_examples():
    t = Text(b"banana")
    assert oracle_lce(t, 2, 4, "right") == 3
    assert oracle_lce(t, 4, 6, "left") == 3
    assert oracle_lce(t, 3, 7, "right") == 0
    with pytest.raises(ValueError):
        oracle_lce(t, 1, 2, "up")


def test_minimal_period_examples():
    assert minimal_period(Text(b"anana"), 1, 5) == 2
    assert minimal_period(Text(b"aaaa"), 1, 4) == 1
    assert minimal_period(Text(WORKED), 5, 31) == 7
    assert minimal_period(Text(b"abc"), 1, 3) == 3


def test_is_lyndon_examples():
    assert is_lyndon(Text(b"ab"), 1, 2)
    assert not is_lyndon(Text(b"ba"), 1, 2)
    assert is_lyndon(Text(b"abababc"), 1, 7)
    assert not is_lyndon(Text(b"aa"), 1, 2)
    assert is_lyndon(Text(b"ba"), 1, 2, OrderSpec.reversed_order())


@pytest.mark.parametrize(
    "s, want",
    [
        (b"bananatree", [(2, 6, 2), (9, 10, 1)]),
        (b"abaababa", [(1, 6, 3), (3, 4, 1), (4, 8, 2)]),
        (b"abc", []),
        (b"", []),
        (b"a", []),
    ],
)
def test_oracle_runs_examples(s, want):
    assert [r.triple for r in oracle_runs(Text(s))] == want


def test_oracle_runs_worked_example_root_and_direction():
    runs = {r.triple: r for r in oracle_runs(Text(WORKED))}
    run = runs[(5, 31, 7)]
    assert run.root == 8
    assert run.direction is Direction.DECREASING


@settings(max_examples=200, deadline=None)
@given(ternary, st.data())
def test_lyndon_characterisations_agree(s, data):
    if not s:
        return
    text = Text(s)
    i = data.draw(st.integers(1, len(s)))
    j = data.draw(st.integers(i, len(s)))
    for order in (OrderSpec.natural(), OrderSpec.reversed_order()):
        assert is_lyndon(text, i, j, order) == is_lyndon_by_suffixes(text, i, j, order)


@pytest.mark.parametrize("sigma, max_len", [(2, 10), (3, 7)])
def test_oracle_runs_matches_literal_enumeration(sigma, max_len):
    for n in range(max_len + 1):
        for word in itertools.product(b"abc"[:sigma], repeat=n):
            s = bytes(word)
            got = [r.triple for r in oracle_runs(Text(s))]
            assert len(got) == len(set(got))
            assert set(got) == literal_runs(s), s


@settings(max_examples=200, deadline=None)
@given(ternary)
def test_oracle_runs_fewer_than_n(s):
    runs = oracle_runs(Text(s))
    assert len(runs) < max(len(s), 1)


def test_oracle_size_limit():
    with pytest.raises(OracleLimitError):
        oracle_nss(Text(b"a" * 5000))
