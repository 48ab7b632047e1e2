"""Deterministic input families for tests and benchmarks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .text_core import ContractViolation, Text

DEFAULT_SIZE_CAP = 1 << 28
DEFAULT_ENUM_CAP = 1 << 20
FIRST_SYMBOL = ord("a")

FAMILIES = ("fibonacci", "thue_morse", "random", "periodic", "literal")


class SizeCapExceeded(ContractViolation):
    pass


def _check_cap(length: int, cap: int, what: str) -> None:
    if length > cap:
        raise SizeCapExceeded(f"{what} would have {length} symbols, cap is {cap}")


def alphabet(sigma: int) -> bytes:
    """The first ``sigma`` symbols: byte values counting up from ``'a'`` (mod 256)."""
    if not 1 <= sigma <= 256:
        raise ContractViolation(f"sigma must be in [1, 256], got {sigma}")
    return bytes((FIRST_SYMBOL + k) % 256 for k in range(sigma))


def fibonacci_length(k: int) -> int:
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


def gen_fibonacci(k: int, cap: int = DEFAULT_SIZE_CAP) -> Text:
    """F(1) = "b", F(2) = "a", F(k) = F(k-1) F(k-2)."""
    if k < 1:
        raise ContractViolation(f"Fibonacci order must be >= 1, got {k}")
    _check_cap(fibonacci_length(k), cap, f"Fibonacci word of order {k}")
    if k == 1:
        return Text(b"b")
    prev, cur = b"b", b"a"
    for _ in range(k - 2):
        prev, cur = cur, cur + prev
    return Text(cur)


def gen_thue_morse(k: int, cap: int = DEFAULT_SIZE_CAP) -> Text:
    """T(0) = "a", T(k+1) = T(k) followed by T(k) with a and b swapped."""
    if k < 0:
        raise ContractViolation(f"Thue-Morse order must be >= 0, got {k}")
    _check_cap(1 << k, cap, f"Thue-Morse word of order {k}")
    swap = bytes.maketrans(b"ab", b"ba")
    t = b"a"
    for _ in range(k):
        t += t.translate(swap)
    return Text(t)


def gen_random(length: int, sigma: int, seed: int) -> Text:
    """``length`` symbols drawn uniformly from ``alphabet(sigma)``.

    The generator is numpy's PCG64 seeded with ``seed`` (``default_rng``), so
    identical arguments give identical bytes across runs and platforms.
    """
    if length < 0:
        raise ContractViolation("length must be non-negative")
    symbols = np.frombuffer(alphabet(sigma), dtype=np.uint8)
    rng = np.random.default_rng(seed)
    return Text(symbols[rng.integers(0, sigma, size=length)].tobytes())


def gen_periodic(root: bytes, length: int) -> Text:
    """Prefix of ``root`` repeated, ``length`` symbols long."""
    if not root and length:
        raise ContractViolation("periodic text needs a non-empty root")
    reps = -(-length // len(root)) if root else 0
    return Text((root * reps)[:length])


def enumerate_all(sigma: int, length: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Text]:
    """All ``sigma ** length`` strings over ``alphabet(sigma)`` in lexicographic order."""
    if length < 0:
        raise ContractViolation("length must be non-negative")
    _check_cap(sigma**length, cap, f"enumeration of {sigma}^{length} strings")
    for word in itertools.product(alphabet(sigma), repeat=length):
        yield Text(bytes(word))


@dataclass(frozen=True)
class GenSpec:
    family: str
    k: int = 0
    length: int | None = None
    sigma: int = 2
    seed: int = 0
    literal: bytes = b""

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ContractViolation(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not 0 <= self.seed < 1 << 64:
            raise ContractViolation("seed must fit in 64 bits")


def generate(spec: GenSpec, cap: int = DEFAULT_SIZE_CAP) -> Text:
    """Build the text described by ``spec``; ``length`` truncates Fibonacci/Thue-Morse."""
    if spec.family == "fibonacci":
        text = gen_fibonacci(spec.k, cap)
    elif spec.family == "thue_morse":
        text = gen_thue_morse(spec.k, cap)
    elif spec.family == "random":
        _check_cap(spec.length or 0, cap, "random text")
        return gen_random(spec.length or 0, spec.sigma, spec.seed)
    elif spec.family == "periodic":
        _check_cap(spec.length or 0, cap, "periodic text")
        return gen_periodic(spec.literal or alphabet(spec.sigma), spec.length or 0)
    else:
        text = Text(spec.literal)
    if spec.length is not None:
        return Text(text.symbols[: spec.length])
    return text
