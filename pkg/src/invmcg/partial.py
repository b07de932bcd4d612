"""Partial injections of {1..n}: the symmetric inverse monoid I_n.

Composition is left to right, ``f * g`` sends i to g(f(i)), which is the
order in which letters of a word act.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator, Mapping

from .words import GeneratorWord, Kind, WordError

ENUMERATION_LIMIT = 5


@dataclass(frozen=True)
class PartialInjection:
    n: int
    images: tuple[int | None, ...]  # images[i - 1] is the image of i, None if undefined

    def __post_init__(self):
        if len(self.images) != self.n:
            raise ValueError("images must have length n")
        seen = [v for v in self.images if v is not None]
        if len(seen) != len(set(seen)) or any(not 1 <= v <= self.n for v in seen):
            raise ValueError(f"not a partial injection of 1..{self.n}: {self.images}")

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "PartialInjection":
        if any(not 1 <= i <= n for i in mapping):
            raise ValueError("domain point out of range")
        return cls(n, tuple(mapping.get(i) for i in range(1, n + 1)))

    @classmethod
    def identity(cls, n: int) -> "PartialInjection":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def restricted_identity(cls, n: int, points) -> "PartialInjection":
        keep = set(points)
        return cls(n, tuple(i if i in keep else None for i in range(1, n + 1)))

    def __call__(self, i: int) -> int | None:
        return self.images[i - 1]

    def __mul__(self, other: "PartialInjection") -> "PartialInjection":
        return compose(self, other)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.images, 1) if v is not None)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(v for v in self.images if v is not None))

    @property
    def rank(self) -> int:
        return len(self.domain)

    def as_dict(self) -> dict[int, int]:
        return {i: v for i, v in enumerate(self.images, 1) if v is not None}

    def __str__(self) -> str:
        return "[" + ", ".join(f"{i}->{v}" for i, v in self.as_dict().items()) + "]"


def compose(f: PartialInjection, g: PartialInjection) -> PartialInjection:
    if f.n != g.n:
        raise ValueError(f"rank mismatch: {f.n} vs {g.n}")
    return PartialInjection(f.n, tuple(None if v is None else g.images[v - 1] for v in f.images))


def inverse(f: PartialInjection) -> PartialInjection:
    back = [None] * f.n
    for i, v in enumerate(f.images, 1):
        if v is not None:
            back[v - 1] = i
    return PartialInjection(f.n, tuple(back))


def is_idempotent(f: PartialInjection) -> bool:
    return all(v is None or v == i for i, v in enumerate(f.images, 1))


def transposition(n: int, i: int) -> PartialInjection:
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return PartialInjection(n, tuple(images))


def tau_of_word(w: GeneratorWord) -> PartialInjection:
    """Image of a word in I_n: sigmas act as transpositions, epsilon_i drops point i."""
    # position -> starting point currently there (None once dropped)
    at = list(range(1, w.rank + 1))
    for a in w.letters:
        i = a.index
        if a.kind is Kind.EPSILON:
            at[i - 1] = None
        else:
            at[i - 1], at[i] = at[i], at[i - 1]
    images: list[int | None] = [None] * w.rank
    for pos, start in enumerate(at, 1):
        if start is not None:
            images[start - 1] = pos
    return PartialInjection(w.rank, tuple(images))


def count_In(n: int) -> int:
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def enumerate_In(n: int) -> list[PartialInjection]:
    if not 0 <= n <= ENUMERATION_LIMIT:
        raise WordError(f"enumerate_In guard: n must be in 0..{ENUMERATION_LIMIT}")
    return list(_iter_In(n))


def _iter_In(n: int) -> Iterator[PartialInjection]:
    points = range(1, n + 1)
    for k in range(n + 1):
        for dom in itertools.combinations(points, k):
            for img in itertools.permutations(points, k):
                yield PartialInjection.from_mapping(n, dict(zip(dom, img)))


def parse_partial(text: str, n: int) -> PartialInjection:
    """Read the ``[1->2, 3->3]`` form."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"expected [..] form, got {text!r}")
    body = body[1:-1].strip()
    mapping = {}
    if body:
        for part in body.split(","):
            src, _, dst = part.strip().partition("->")
            mapping[int(src)] = int(dst)
    return PartialInjection.from_mapping(n, mapping)
