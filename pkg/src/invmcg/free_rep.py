"""Partial automorphisms of free groups and the faithful representation of IB_n.

A partial braid acts on the free group of the punctured disc.  Punctures
whose strand is deleted are filled in, which on the group level kills the
corresponding generator.  The element is recorded by its shadow in I_n and,
for each surviving generator x_i, the reduced image word, always a
conjugate of x_{t(i)} written over the surviving image letters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from . import freegroup as fg
from .freegroup import Word
from .partial import PartialInjection, compose
from .words import GeneratorLetter, GeneratorWord, Kind, WordError


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: Word

    def __post_init__(self):
        object.__setattr__(self, "letters", fg.reduce(self.letters))
        if any(not 1 <= abs(a) <= self.rank for a in self.letters):
            raise ValueError("letter outside x_1..x_n")

    def __str__(self) -> str:
        return fg.to_text(self.letters)


@dataclass(frozen=True)
class PartialFreeAutomorphism:
    n: int
    shadow: PartialInjection
    images: tuple[Word | None, ...]  # images[i - 1] = reduced image of x_i

    def __call__(self, i: int) -> Word | None:
        return self.images[i - 1]

    def __mul__(self, other: "PartialFreeAutomorphism") -> "PartialFreeAutomorphism":
        return compose_pfa(self, other)

    def check(self) -> None:
        allowed = set(self.shadow.image)
        for i, w in enumerate(self.images, 1):
            t = self.shadow(i)
            if (w is None) != (t is None):
                raise AssertionError(f"x{i}: image and shadow disagree")
            if w is None:
                continue
            if fg.cyclic_key(w) != (t,):
                raise AssertionError(f"x{i} -> {fg.to_text(w)} is not a conjugate of x{t}")
            if any(abs(a) not in allowed for a in w):
                raise AssertionError(f"x{i} image uses a letter outside the image alphabet")

    def __str__(self) -> str:
        return "\n".join(
            f"{i} -> " + ("_" if w is None else fg.to_text(w)) for i, w in enumerate(self.images, 1)
        )


def identity_pfa(n: int) -> PartialFreeAutomorphism:
    return PartialFreeAutomorphism(n, PartialInjection.identity(n), tuple((i,) for i in range(1, n + 1)))


def compose_pfa(f: PartialFreeAutomorphism, g: PartialFreeAutomorphism) -> PartialFreeAutomorphism:
    """f then g.

    Generators outside g's domain are set to 1 in f's images, g is applied
    letterwise, then generators outside the composite image are set to 1.
    """
    if f.n != g.n:
        raise WordError(f"rank mismatch: {f.n} vs {g.n}")
    shadow = compose(f.shadow, g.shadow)
    g_dead = {j for j in range(1, f.n + 1) if g.images[j - 1] is None}
    g_map = {j: w for j, w in enumerate(g.images, 1) if w is not None}
    final_dead = set(range(1, f.n + 1)) - set(shadow.image)
    images: list[Word | None] = []
    for i in range(1, f.n + 1):
        if shadow(i) is None:
            images.append(None)
            continue
        w = fg.kill(f.images[i - 1], g_dead) if g_dead else f.images[i - 1]
        w = fg.substitute(w, g_map)
        images.append(fg.kill(w, final_dead) if final_dead else w)
    return PartialFreeAutomorphism(f.n, shadow, tuple(images))


@lru_cache(maxsize=None)
def phi_generator(letter: GeneratorLetter, rank: int) -> PartialFreeAutomorphism:
    i = letter.index
    if letter.kind is Kind.EPSILON:
        images = [(j,) if j != i else None for j in range(1, rank + 1)]
        return PartialFreeAutomorphism(rank, PartialInjection.restricted_identity(rank, set(range(1, rank + 1)) - {i}), tuple(images))
    images = [(j,) for j in range(1, rank + 1)]
    if letter.kind is Kind.SIGMA:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    else:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    shadow_images = list(range(1, rank + 1))
    shadow_images[i - 1], shadow_images[i] = i + 1, i
    return PartialFreeAutomorphism(rank, PartialInjection(rank, tuple(shadow_images)), tuple(images))


def phi_of_word(w: GeneratorWord) -> PartialFreeAutomorphism:
    result = identity_pfa(w.rank)
    for letter in w.letters:
        result = compose_pfa(result, phi_generator(letter, w.rank))
    return result


def artin_images(signed: tuple[int, ...], n: int) -> dict[int, Word]:
    """Plain Artin action of an epsilon-free word given by signed sigma indices."""
    images = {j: (j,) for j in range(1, n + 1)}
    for a in signed:
        i = abs(a)
        if a > 0:
            gen = {i: (i + 1,), i + 1: (-(i + 1), i, i + 1)}
        else:
            gen = {i: (i, i + 1, -i), i + 1: (i,)}
        for j in images:
            images[j] = fg.substitute(images[j], gen)
    return images


def ib_equal_disc(w1: GeneratorWord, w2: GeneratorWord) -> bool:
    """Word problem in IB_n: equal images under the faithful representation."""
    if w1.rank != w2.rank:
        raise WordError(f"rank mismatch: {w1.rank} vs {w2.rank}")
    return phi_of_word(w1) == phi_of_word(w2)


# ------------------------------------------------------- genus-0 surface action


@dataclass(frozen=True)
class SpherePartialAutomorphism:
    """Partial automorphism of the punctured-sphere group.

    Images are written over the surviving image letters u_j with the
    largest one (``eliminated``) replaced by the inverse of the ordered
    product of the others, so that u_{j_1} ... u_{j_k} = 1 holds.
    """

    n: int
    shadow: PartialInjection
    images: tuple[Word | None, ...]
    eliminated: int | None

    def __str__(self) -> str:
        lines = [
            f"{i} -> " + ("_" if w is None else fg.to_text(w, "u")) for i, w in enumerate(self.images, 1)
        ]
        if self.eliminated is not None:
            lines.append(f"(u{self.eliminated} eliminated)")
        return "\n".join(lines)


def sphere_action_of_word(w: GeneratorWord) -> SpherePartialAutomorphism:
    disc = phi_of_word(w)
    image = disc.shadow.image
    if not image:
        return SpherePartialAutomorphism(w.rank, disc.shadow, disc.images, None)
    top = image[-1]
    sub = {top: fg.inv(tuple(image[:-1]))}
    images = tuple(None if v is None else fg.substitute(v, sub) for v in disc.images)
    return SpherePartialAutomorphism(w.rank, disc.shadow, images, top)


Verdict = Literal["equal", "distinct", "inconclusive"]


def _reduced_words(letters: list[int], bound: int):
    yield ()
    frontier = [()]
    alphabet = [a for g in letters for a in (g, -g)]
    for _ in range(bound):
        nxt = []
        for w in frontier:
            for a in alphabet:
                if w and w[-1] == -a:
                    continue
                c = w + (a,)
                nxt.append(c)
                yield c
        frontier = nxt


def iout_equal_verifier(a1: SpherePartialAutomorphism, a2: SpherePartialAutomorphism, bound: int) -> Verdict:
    """Bounded test for equality modulo inner automorphisms.

    ``equal`` when a conjugator of length <= bound is found, ``distinct`` when
    shadows or conjugacy classes of images (and of pairwise products) differ,
    otherwise ``inconclusive``.
    """
    if a1.n != a2.n:
        raise WordError(f"rank mismatch: {a1.n} vs {a2.n}")
    if a1.shadow != a2.shadow:
        return "distinct"
    dom = a1.shadow.domain
    if not dom:
        return "equal"
    x = [a1.images[i - 1] for i in dom]
    y = [a2.images[i - 1] for i in dom]
    for p, q in zip(x, y):
        if fg.cyclic_key(p) != fg.cyclic_key(q):
            return "distinct"
    for (p1, q1), (p2, q2) in itertools.combinations(zip(x, y), 2):
        if fg.cyclic_key(fg.mul(p1, p2)) != fg.cyclic_key(fg.mul(q1, q2)):
            return "distinct"
    free_letters = [j for j in a1.shadow.image if j != a1.eliminated]
    for c in _reduced_words(free_letters, bound):
        ci = fg.inv(c)
        if all(fg.mul(ci, p, c) == q for p, q in zip(x, y)):
            return "equal"
    return "inconclusive"
