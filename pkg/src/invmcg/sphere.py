"""Normal forms for braid groups of the sphere and mapping class groups M_{0,n}.

An element is written as

    sigma_{i_n,n} ... sigma_{i_2,2} * w_1 ... w_{n-3} * Delta^{2 delta}

with a coset word picking the permutation, free layer words w_j over
s_{j,j+1}, ..., s_{j,n-1}, and (for the braid group only) a central full
twist with delta in {0, 1}.  The disc braid group gets the same head with
n - 1 layers u_j over s_{j,j+1}, ..., s_{j,n} and no twist; that variant is
used as the canonical core of disc elements in the inverse tower.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import braids
from . import freegroup as fg
from .tables import MultiplicationTable
from .words import GeneratorWord, WordError, coset_signed, garside

FLAVORS = ("disc", "sphere-braid", "sphere-mcg")
SPHERE_ENUMERATION_LIMIT = 3

Layer = tuple[int, ...]


def _check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise WordError(f"unknown flavor {flavor!r}; expected one of {', '.join(FLAVORS)}")


def _layer_text(layer: Layer, j: int) -> str:
    if not layer:
        return "1"
    parts = []
    for a, run in itertools.groupby(layer):
        e = len(list(run)) * (1 if a > 0 else -1)
        name = f"q{j},{abs(a)}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)


@dataclass(frozen=True)
class MarkovNormalForm:
    rank: int
    flavor: str
    coset_indices: tuple[int, ...]  # (i_2, ..., i_n)
    layers: tuple[Layer, ...]
    delta: int = 0

    def signed(self) -> tuple[int, ...]:
        head = coset_word_signed(self.coset_indices)
        body = braids.layers_expansion(self.layers)
        twist = garside(self.rank).signed() * 2 if self.delta else ()
        return head + body + twist

    def word(self) -> GeneratorWord:
        return GeneratorWord.from_signed(self.rank, self.signed())

    def permutation(self) -> tuple[int, ...]:
        return braids.permutation(coset_word_signed(self.coset_indices), self.rank)

    def is_identity(self) -> bool:
        return (
            self.coset_indices == tuple(range(2, self.rank + 1))
            and not any(self.layers)
            and not self.delta
        )

    def __str__(self) -> str:
        cosets = "(" + ",".join(map(str, self.coset_indices)) + ")"
        layers = "[" + "|".join(_layer_text(w, j) for j, w in enumerate(self.layers, 1)) + "]"
        text = f"cosets={cosets} layers={layers}"
        if self.flavor == "sphere-braid":
            text += f" delta={self.delta}"
        return text

    def to_json(self) -> dict:
        out = {
            "rank": self.rank,
            "flavor": self.flavor,
            "cosets": list(self.coset_indices),
            "layers": [list(w) for w in self.layers],
        }
        if self.flavor == "sphere-braid":
            out["delta"] = self.delta
        return out


def coset_word_signed(indices: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for j, i in reversed(list(enumerate(indices, 2))):
        out.extend(coset_signed(i, j))
    return tuple(out)


def _require_braid(w: GeneratorWord) -> None:
    if w.has_epsilon:
        raise WordError("epsilon letter in a group word")


def coset_factor(w: GeneratorWord) -> tuple[tuple[int, ...], GeneratorWord]:
    """Split w as R * P with R a coset word and P pure."""
    _require_braid(w)
    n = w.rank
    perm = list(braids.permutation(w.signed(), n))
    indices: list[int] = []
    for j in range(n, 1, -1):
        i = perm.index(j) + 1
        indices.append(i)
        # peel off sigma_{i,j}: new perm = c^-1 then perm, restricted to 1..j-1
        rest = perm[: i - 1] + perm[i:j]
        perm = rest
    indices.reverse()
    head = coset_word_signed(indices)
    pure = braids.inverse(head) + w.signed()
    return tuple(indices), GeneratorWord.from_signed(n, pure)


def comb_pure(pure_word: GeneratorWord) -> tuple[Layer, ...]:
    """Disc combing: layers u_1..u_{n-1}, u_j over s_{j,j+1..n}."""
    _require_braid(pure_word)
    signed = pure_word.signed()
    if not braids.is_pure(signed, pure_word.rank):
        raise WordError("word is not a pure braid")
    return braids.comb(signed, pure_word.rank, sphere=False)


def _delta(signed: Sequence[int], n: int) -> int:
    if n < 3:
        return 0
    small = braids.delete_strands(signed, n, range(1, n - 2))
    total = sum(1 if a > 0 else -1 for a in small) % 4
    if total % 2:
        raise AssertionError("pure three-strand braid with odd exponent sum")
    return total // 2


def sphere_reduce(layers: Sequence[Layer], n: int, flavor: str) -> tuple[tuple[Layer, ...], int]:
    """Turn disc layers of a pure braid into sphere layers w_1..w_{n-3} and delta."""
    _check_flavor(flavor)
    if flavor == "disc":
        return tuple(layers), 0
    signed = braids.layers_expansion(layers)
    return _sphere_tail(signed, n, flavor)


def _sphere_tail(signed: Sequence[int], n: int, flavor: str) -> tuple[tuple[Layer, ...], int]:
    sphere_layers = braids.comb(signed, n, sphere=True)
    delta = _delta(signed, n) if flavor == "sphere-braid" else 0
    return sphere_layers, delta


def normal_form(w: GeneratorWord, flavor: str) -> MarkovNormalForm:
    _check_flavor(flavor)
    indices, pure = coset_factor(w)
    if flavor == "disc":
        layers, delta = comb_pure(pure), 0
    else:
        # combing on the disc first would only be re-expanded; go straight to the sphere layers
        layers, delta = _sphere_tail(pure.signed(), w.rank, flavor)
    return MarkovNormalForm(w.rank, flavor, indices, layers, delta)


def equal_sphere(w1: GeneratorWord, w2: GeneratorWord, flavor: str) -> bool:
    if w1.rank != w2.rank:
        raise WordError(f"rank mismatch: {w1.rank} vs {w2.rank}")
    return normal_form(w1, flavor) == normal_form(w2, flavor)


def inverse_form(nf: MarkovNormalForm) -> MarkovNormalForm:
    return normal_form(nf.word().inverse(), nf.flavor)


def product_form(a: MarkovNormalForm, b: MarkovNormalForm) -> MarkovNormalForm:
    if (a.rank, a.flavor) != (b.rank, b.flavor):
        raise WordError("rank or flavor mismatch")
    return normal_form(a.word() + b.word(), a.flavor)


def identity_form(n: int, flavor: str) -> MarkovNormalForm:
    return normal_form(GeneratorWord(n, ()), flavor)


@dataclass(frozen=True)
class SphereEnumeration:
    rank: int
    flavor: str
    elements: tuple[MarkovNormalForm, ...]
    table: MultiplicationTable

    @property
    def count(self) -> int:
        return len(self.elements)


def enumerate_sphere(n: int, flavor: str) -> SphereEnumeration:
    """All elements of a finite sphere group (n <= 3) with their multiplication table."""
    if flavor not in ("sphere-braid", "sphere-mcg"):
        raise WordError("enumeration needs a sphere flavor")
    if not 0 <= n <= SPHERE_ENUMERATION_LIMIT:
        raise WordError(f"only ranks 0..{SPHERE_ENUMERATION_LIMIT} give finite groups to enumerate")
    deltas = (0, 1) if flavor == "sphere-braid" and n >= 3 else (0,)
    elements = []
    for indices in itertools.product(*(range(1, j + 1) for j in range(2, n + 1))):
        for d in deltas:
            elements.append(MarkovNormalForm(n, flavor, tuple(indices), (), d))
    # each listed form must already be canonical
    for e in elements:
        if normal_form(e.word(), flavor) != e:
            raise AssertionError(f"{e} is not in normal form")
    table = MultiplicationTable.build(elements, product_form)
    return SphereEnumeration(n, flavor, tuple(elements), table)


def random_normal_form(n: int, flavor: str, rng, max_layer: int = 4) -> MarkovNormalForm:
    """A random normal form, built directly from its components."""
    _check_flavor(flavor)
    indices = tuple(rng.randint(1, j) for j in range(2, n + 1))
    if flavor == "disc":
        alphabets = [range(j + 1, n + 1) for j in range(1, n)]
    else:
        alphabets = [range(j + 1, n) for j in range(1, n - 2)]
    layers = []
    for alphabet in alphabets:
        letters = [rng.choice((1, -1)) * rng.choice(list(alphabet)) for _ in range(rng.randint(0, max_layer))]
        layers.append(fg.reduce(letters))
    delta = rng.randint(0, 1) if flavor == "sphere-braid" and n >= 3 else 0
    return MarkovNormalForm(n, flavor, indices, tuple(layers), delta)


def coset_words(n: int) -> list[GeneratorWord]:
    return [
        GeneratorWord.from_signed(n, coset_word_signed(ix))
        for ix in itertools.product(*(range(1, j + 1) for j in range(2, n + 1)))
    ]

