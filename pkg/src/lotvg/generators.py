"""Deterministic synthetic test series.

Random series draw from xoshiro256** seeded through splitmix64, written out
here in plain integer arithmetic so every platform produces the same bits:

* seeding: the 64-bit seed feeds splitmix64, whose first four outputs are
  the xoshiro state words;
* uniform: ``(next() >> 11) * 2**-53``, a double in [0, 1);
* normal: Box-Muller on two uniforms ``u1, u2`` with ``r = sqrt(-2 ln(1 - u1))``,
  yielding ``r cos(2 pi u2)`` then ``r sin(2 pi u2)``;
* exponential: ``-ln(1 - u)``;
* random walk: step ``+1`` when the top bit of ``next()`` is set, else ``-1``.

Recurrences are 1-indexed in their usual statement; position 0 of the
returned list holds ``s(1)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .exceptions import EmptyInputError

__all__ = ["GeneratorKind", "GeneratorSpec", "Xoshiro256", "generate", "conway", "parse_kind"]

_MASK = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


class Xoshiro256:
    """xoshiro256** 1.0 with splitmix64 seeding."""

    def __init__(self, seed: int):
        x = seed & _MASK
        state = []
        for _ in range(4):
            x = (x + 0x9E3779B97F4A7C15) & _MASK
            z = x
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
            state.append(z ^ (z >> 31))
        self.s = state

    @classmethod
    def from_state(cls, words) -> "Xoshiro256":
        rng = cls.__new__(cls)
        rng.s = [w & _MASK for w in words]
        return rng

    def next_u64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & _MASK, 7) * 9) & _MASK
        t = (s[1] << 17) & _MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


class GeneratorKind(enum.Enum):
    UNIFORM = "uniform"
    NORMAL = "normal"
    EXPONENTIAL = "exponential"
    CONWAY = "conway"
    RANDOM_WALK = "walk"


_KIND_ALIASES = {
    "uniform": GeneratorKind.UNIFORM,
    "uniform01": GeneratorKind.UNIFORM,
    "normal": GeneratorKind.NORMAL,
    "stdnormal": GeneratorKind.NORMAL,
    "exponential": GeneratorKind.EXPONENTIAL,
    "exp": GeneratorKind.EXPONENTIAL,
    "conway": GeneratorKind.CONWAY,
    "walk": GeneratorKind.RANDOM_WALK,
    "randomwalk": GeneratorKind.RANDOM_WALK,
    "random-walk": GeneratorKind.RANDOM_WALK,
}


def parse_kind(kind: "GeneratorKind | str") -> GeneratorKind:
    if isinstance(kind, GeneratorKind):
        return kind
    try:
        return _KIND_ALIASES[str(kind).lower()]
    except KeyError:
        raise ValueError(f"unknown generator kind {kind!r}") from None


@dataclass(frozen=True)
class GeneratorSpec:
    kind: GeneratorKind
    length: int
    seed: int = 1024

    def __post_init__(self):
        object.__setattr__(self, "kind", parse_kind(self.kind))
        if self.length < 1:
            raise EmptyInputError(f"series length must be >= 1, got {self.length}")

    @property
    def name(self) -> str:
        return self.kind.value


def conway(length: int) -> list[float]:
    """Hofstadter-Conway sequence: s(1)=s(2)=1, s(t)=s(s(t-1))+s(t-s(t-1))."""
    s = [0, 1, 1]  # s[0] is padding so that s[t] is term t
    for t in range(3, length + 1):
        prev = s[t - 1]
        s.append(s[prev] + s[t - prev])
    return [float(x) for x in s[1:length + 1]]


def generate(spec: GeneratorSpec) -> list[float]:
    n = spec.length
    kind = spec.kind
    if kind is GeneratorKind.CONWAY:
        return conway(n)

    rng = Xoshiro256(spec.seed)
    if kind is GeneratorKind.UNIFORM:
        return [rng.uniform() for _ in range(n)]
    if kind is GeneratorKind.EXPONENTIAL:
        return [-math.log(1.0 - rng.uniform()) for _ in range(n)]
    if kind is GeneratorKind.NORMAL:
        out = []
        while len(out) < n:
            r = math.sqrt(-2.0 * math.log(1.0 - rng.uniform()))
            theta = 2.0 * math.pi * rng.uniform()
            out.append(r * math.cos(theta))
            out.append(r * math.sin(theta))
        return out[:n]
    if kind is GeneratorKind.RANDOM_WALK:
        out = [0.0]
        for _ in range(n - 1):
            out.append(out[-1] + (1.0 if rng.next_u64() >> 63 else -1.0))
        return out
    raise ValueError(f"unhandled generator kind {kind!r}")
