"""Deterministic dataset generators for the benchmark harness.

All randomness flows through splitmix64, so a (kind, n, k, seed) tuple pins
down one input sequence bit-for-bit on every platform.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class Rng64:
    """splitmix64 stream: 64-bit state, 64-bit outputs, equal seeds -> equal streams."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)


class DatasetKind(enum.Enum):
    SHUFFLED = "shuffled"
    SAWTOOTH = "sawtooth"
    KDISTINCT = "kdistinct"


@dataclass(frozen=True)
class DatasetSpec:
    """Fully determines one input sequence."""

    kind: DatasetKind
    n: int
    k: int = 1
    seed: int = 0

    def generate(self) -> list[int]:
        if self.kind is DatasetKind.SHUFFLED:
            return gen_shuffled(self.n, self.seed)
        if self.kind is DatasetKind.SAWTOOTH:
            return gen_sawtooth(self.n, self.k)
        return gen_kdistinct(self.n, self.k, self.seed)


def _fisher_yates(values: list[int], rng: Rng64) -> list[int]:
    # swap i with a uniform j <= i, walking i from the top down; the modulo
    # bias of `next() % (i+1)` is negligible at 64 bits and kept for
    # reproducibility of the streams
    for i in range(len(values) - 1, 0, -1):
        j = rng.next() % (i + 1)
        values[i], values[j] = values[j], values[i]
    return values


def gen_sawtooth(n: int, k: int) -> list[int]:
    """``i mod k`` ramps: deterministic, seedless, exactly min(n, k) distinct keys."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return [i % k for i in range(n)]


def gen_shuffled(n: int, seed: int) -> list[int]:
    """Uniform permutation of 0..n-1 (all keys distinct)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _fisher_yates(list(range(n)), Rng64(seed))


def gen_kdistinct(n: int, k: int, seed: int) -> list[int]:
    """Shuffled sawtooth: same multiset as gen_sawtooth(n, k), random order."""
    return _fisher_yates(gen_sawtooth(n, k), Rng64(seed))
