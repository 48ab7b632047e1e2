import math

import pytest

from lyndon_runs.gen import (
    GenSpec,
    SizeCapExceeded,
    alphabet,
    enumerate_all,
    fibonacci_length,
    gen_fibonacci,
    gen_periodic,
    gen_random,
    gen_thue_morse,
    generate,
)
from lyndon_runs.text_core import ContractViolation


def test_fibonacci_examples():
    assert gen_fibonacci(1).symbols == b"b"
    assert gen_fibonacci(2).symbols == b"a"
    assert gen_fibonacci(5).symbols == b"abaab"
    assert gen_fibonacci(6).symbols == b"abaababa"
    assert gen_fibonacci(10).n == 55 == fibonacci_length(10)


def test_thue_morse_examples():
    assert gen_thue_morse(0).symbols == b"a"
    assert gen_thue_morse(2).symbols == b"abba"
    assert gen_thue_morse(3).symbols == b"abbabaab"
    assert gen_thue_morse(20).n == 1048576


def _fib_symbol(x: int) -> int:
    # characteristic Sturmian word with slope 1/phi^2; floor(m*phi) via isqrt
    def floor_phi(m):
        return (m + math.isqrt(5 * m * m)) // 2

    bit = 2 + floor_phi(x) - floor_phi(x + 1)
    return ord("a") + bit


def test_fibonacci_matches_closed_form():
    s = gen_fibonacci(27).symbols
    for x in list(range(1, 2000)) + list(range(1, len(s) + 1, 997)):
        assert s[x - 1] == _fib_symbol(x), x


def test_thue_morse_matches_bit_parity():
    s = gen_thue_morse(18).symbols
    for x in list(range(2000)) + list(range(0, len(s), 613)):
        assert s[x] == ord("a") + bin(x).count("1") % 2, x


def test_random_examples():
    assert gen_random(0, 4, 1).symbols == b""
    assert gen_random(256, 1, 9).symbols == b"a" * 256
    assert gen_random(500, 26, 3) == gen_random(500, 26, 3)
    assert gen_random(500, 26, 3) != gen_random(500, 26, 4)
    assert set(gen_random(5000, 4, 0).symbols) == set(b"abcd")


def test_random_rejects_bad_sigma():
    with pytest.raises(ContractViolation):
        gen_random(3, 0, 0)
    with pytest.raises(ContractViolation):
        alphabet(257)


def test_alphabet_wraps_bytes():
    full = alphabet(256)
    assert len(set(full)) == 256 and full[:2] == b"ab"


def test_enumerate_all_examples():
    assert [t.symbols for t in enumerate_all(2, 2)] == [b"aa", b"ab", b"ba", b"bb"]
    assert [t.symbols for t in enumerate_all(3, 1)] == [b"a", b"b", b"c"]
    assert sum(1 for _ in enumerate_all(2, 16)) == 65536
    assert [t.symbols for t in enumerate_all(2, 0)] == [b""]


def test_caps():
    with pytest.raises(SizeCapExceeded):
        list(enumerate_all(4, 11))
    with pytest.raises(SizeCapExceeded):
        gen_fibonacci(30, cap=1000)
    with pytest.raises(SizeCapExceeded):
        gen_thue_morse(11, cap=1024)
    with pytest.raises(ContractViolation):
        gen_fibonacci(0)


def test_generate_dispatch():
    assert generate(GenSpec("fibonacci", k=6, length=5)).symbols == b"abaab"
    assert generate(GenSpec("thue_morse", k=3)).symbols == b"abbabaab"
    assert generate(GenSpec("periodic", length=7, literal=b"abc")).symbols == b"abcabca"
    assert generate(GenSpec("literal", literal=b"xyz")).symbols == b"xyz"
    assert generate(GenSpec("random", length=10, sigma=3, seed=5)) == gen_random(10, 3, 5)
    assert gen_periodic(b"", 0).symbols == b""
    with pytest.raises(ContractViolation):
        GenSpec("zipf")
