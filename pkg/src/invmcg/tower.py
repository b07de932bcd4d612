"""Inverse monoids over the disc braid group, the sphere braid group and M_{0,n}.

An element is stored as (domain, image, core): the points whose strands
survive, where they end up, and the canonical form of the rank-k group
element obtained by deleting every other strand.  Multiplication goes
through words: embed both factors, concatenate, normalize.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator, Sequence

from . import braids
from .free_rep import ib_equal_disc
from .partial import PartialInjection, compose as compose_partial, tau_of_word
from .sphere import (
    FLAVORS,
    MarkovNormalForm,
    enumerate_sphere,
    identity_form,
    inverse_form,
    normal_form,
    random_normal_form,
)
from .words import (
    GeneratorWord,
    Kind,
    WordError,
    eps,
    garside,
    sigma,
)


def _tuple_text(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


@dataclass(frozen=True)
class PartialMCElement:
    rank: int
    flavor: str
    domain: tuple[int, ...]
    image: tuple[int, ...]
    core: MarkovNormalForm

    def __post_init__(self):
        k = len(self.domain)
        if len(self.image) != k or self.core.rank != k:
            raise ValueError("domain, image and core ranks disagree")
        if list(self.domain) != sorted(set(self.domain)) or list(self.image) != sorted(set(self.image)):
            raise ValueError("domain and image must be strictly increasing")
        if self.core.flavor != self.flavor:
            raise ValueError("core flavor differs from element flavor")

    @property
    def k(self) -> int:
        return len(self.domain)

    def tau(self) -> PartialInjection:
        perm = self.core.permutation() if self.k else ()
        mapping = {self.domain[m]: self.image[perm[m] - 1] for m in range(self.k)}
        return PartialInjection.from_mapping(self.rank, mapping)

    def is_idempotent(self) -> bool:
        return self.domain == self.image and self.core.is_identity()

    def __mul__(self, other: "PartialMCElement") -> "PartialMCElement":
        return multiply(self, other)

    def __str__(self) -> str:
        return f"k={self.k} dom={_tuple_text(self.domain)} img={_tuple_text(self.image)} core={self.core}"

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "flavor": self.flavor,
            "k": self.k,
            "domain": list(self.domain),
            "image": list(self.image),
            "core": self.core.to_json(),
        }


def _check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise WordError(f"unknown flavor {flavor!r}; expected one of {', '.join(FLAVORS)}")


def strand_delete(w: GeneratorWord, dead) -> GeneratorWord:
    """Remove the strands starting at the positions in ``dead``."""
    if w.has_epsilon:
        raise WordError("strand deletion needs an epsilon-free word")
    dead = set(dead)
    if any(not 1 <= d <= w.rank for d in dead):
        raise WordError("dead strand out of range")
    return GeneratorWord.from_signed(w.rank - len(dead), braids.delete_strands(w.signed(), w.rank, dead))


def _trace(w: GeneratorWord) -> tuple[set[int], list[int], tuple[int, ...]]:
    """Dead strands, final position -> strand, and the epsilon-free transport."""
    at = list(range(1, w.rank + 1))
    dead: set[int] = set()
    transport: list[int] = []
    for letter in w.letters:
        i = letter.index
        if letter.kind is Kind.EPSILON:
            dead.add(at[i - 1])
        else:
            at[i - 1], at[i] = at[i], at[i - 1]
            transport.append(letter.signed())
    return dead, at, tuple(transport)


def normalize(w: GeneratorWord, flavor: str) -> PartialMCElement:
    _check_flavor(flavor)
    n = w.rank
    dead, at, transport = _trace(w)
    domain = tuple(s for s in range(1, n + 1) if s not in dead)
    image = tuple(p for p in range(1, n + 1) if at[p - 1] not in dead)
    core_word = GeneratorWord.from_signed(len(domain), braids.delete_strands(transport, n, dead))
    return PartialMCElement(n, flavor, domain, image, normal_form(core_word, flavor))


def _prefix(domain: Sequence[int], n: int) -> list[int]:
    out: list[int] = []
    for m, i in enumerate(domain, 1):
        out.extend(range(i - 1, m - 1, -1))
    return out


def _suffix(image: Sequence[int], n: int) -> list[int]:
    out: list[int] = []
    for m in range(len(image), 0, -1):
        out.extend(range(m, image[m - 1]))
    return out


def embed(e: PartialMCElement) -> GeneratorWord:
    n, k = e.rank, e.k
    block = tuple(eps(i) for i in range(k + 1, n + 1))
    letters = [sigma(i) for i in _prefix(e.domain, n)]
    letters += block
    letters += [sigma(abs(a), a) for a in e.core.signed()]
    letters += block
    letters += [sigma(i) for i in _suffix(e.image, n)]
    return GeneratorWord(n, tuple(letters))


def multiply(e1: PartialMCElement, e2: PartialMCElement) -> PartialMCElement:
    if (e1.rank, e1.flavor) != (e2.rank, e2.flavor):
        raise WordError("rank or flavor mismatch")
    return normalize(embed(e1) + embed(e2), e1.flavor)


def inverse_elt(e: PartialMCElement) -> PartialMCElement:
    return PartialMCElement(e.rank, e.flavor, e.image, e.domain, inverse_form(e.core))


def identity_element(n: int, flavor: str) -> PartialMCElement:
    return normalize(GeneratorWord(n, ()), flavor)


def empty_element(n: int, flavor: str) -> PartialMCElement:
    return normalize(GeneratorWord(n, tuple(eps(i) for i in range(1, n + 1))), flavor)


def eps_element(n: int, i: int, flavor: str) -> PartialMCElement:
    if not 1 <= i <= n:
        raise WordError(f"index {i} out of range 1..{n}")
    return normalize(GeneratorWord(n, (eps(i),)), flavor)


def restricted_identity(n: int, points: Sequence[int], flavor: str) -> PartialMCElement:
    points = tuple(sorted(points))
    return PartialMCElement(n, flavor, points, points, identity_form(len(points), flavor))


def factorize(e: PartialMCElement) -> tuple[PartialMCElement, PartialMCElement]:
    """Split e as (idempotent on its domain) * (element of the group)."""
    idem = restricted_identity(e.rank, e.domain, e.flavor)
    group_word = GeneratorWord(e.rank, tuple(a for a in embed(e).letters if not a.is_epsilon))
    return idem, normalize(group_word, e.flavor)


def is_brunnian(e: PartialMCElement, i: int) -> bool:
    """Whether e becomes trivial once strand i is forgotten, i.e. eps_i * e = eps_i."""
    if not 1 <= i <= e.rank:
        raise WordError(f"index {i} out of range 1..{e.rank}")
    marker = eps_element(e.rank, i, e.flavor)
    return multiply(marker, e) == marker


def is_makanin(e: PartialMCElement) -> bool:
    return all(is_brunnian(e, i) for i in range(1, e.rank + 1))


# ----------------------------------------------------------- abelianization


def abelian_modulus(n: int) -> int:
    if n <= 1:
        return 1
    return 2 * (n - 1) if n % 2 == 0 else n - 1


@dataclass(frozen=True)
class Abelianization:
    has_eps: bool
    residue: int
    modulus: int

    def __add__(self, other: "Abelianization") -> "Abelianization":
        if self.modulus != other.modulus:
            raise WordError("modulus mismatch")
        has_eps = self.has_eps or other.has_eps
        residue = 0 if has_eps else (self.residue + other.residue) % self.modulus
        return Abelianization(has_eps, residue, self.modulus)

    def __str__(self) -> str:
        return f"({'eps' if self.has_eps else 1}, {self.residue} mod {self.modulus})"

    def to_json(self) -> dict:
        return {"eps": self.has_eps, "residue": self.residue, "modulus": self.modulus}


def abelianize(w: GeneratorWord) -> Abelianization:
    """Image in the commutative quotient of IM_{0,n}.

    The idempotent absorbs the cyclic part: once an epsilon occurs the
    residue is reported as 0.
    """
    m = abelian_modulus(w.rank)
    if w.has_epsilon:
        return Abelianization(True, 0, m)
    return Abelianization(False, w.exponent_sum() % m, m)


def abelian_order_from_relations(n: int) -> int:
    """Order of the abelianized M_{0,n}, read off the relator exponent sums.

    All sigma_i are conjugate, so the abelianization is cyclic of order the
    gcd of the exponent sums of the defining relators.
    """
    from .words import relations

    g = 0
    for rel in relations("sphere-mcg", n):
        g = gcd(g, abs(rel.lhs.exponent_sum() - rel.rhs.exponent_sum()))
    return g


# ------------------------------------------------------------------- center


def in_center(e: PartialMCElement) -> bool:
    """Structural center test for IM_{0,n}.

    For n <= 1 the monoid is commutative.  From n = 2 on, an element that
    commutes with every epsilon_i must have identity shadow on its domain,
    and commuting with the transpositions forces the domain to be empty or
    everything; M_{0,n} itself is centerless for n >= 3 and for n = 2 its
    generator fails to commute with epsilon_1.
    """
    if e.flavor != "sphere-mcg":
        raise WordError("the center test is defined for the sphere-mcg flavor")
    if e.rank <= 1:
        return True
    return e.k == 0 or (e.k == e.rank and e.core.is_identity())


def commutes_with_generators(e: PartialMCElement) -> bool:
    """Brute commutation with every sigma_i and epsilon_i."""
    n = e.rank
    gens = [normalize(GeneratorWord(n, (sigma(i),)), e.flavor) for i in range(1, n)]
    gens += [eps_element(n, i, e.flavor) for i in range(1, n + 1)]
    return all(multiply(e, g) == multiply(g, e) for g in gens)


# ------------------------------------------------------------- identities


def delta_shift_check(n: int, i: int, flavors: Sequence[str] = FLAVORS) -> bool:
    """eps_i Delta = Delta eps_{n+1-i} in each listed flavor."""
    if not 1 <= i <= n:
        raise WordError(f"index {i} out of range 1..{n}")
    d = garside(n)
    left = GeneratorWord(n, (eps(i),)) + d
    right = d + GeneratorWord(n, (eps(n + 1 - i),))
    return all(normalize(left, f) == normalize(right, f) for f in flavors)


# ------------------------------------------------------------ enumeration


def elements(n: int, flavor: str) -> Iterator[PartialMCElement]:
    """All elements of a finite tower (sphere flavors, n <= 3)."""
    if flavor == "disc":
        raise WordError("the disc tower is infinite")
    for k in range(n + 1):
        cores = enumerate_sphere(k, flavor).elements
        for dom in itertools.combinations(range(1, n + 1), k):
            for img in itertools.combinations(range(1, n + 1), k):
                for core in cores:
                    yield PartialMCElement(n, flavor, dom, img, core)


def random_element(n: int, flavor: str, rng: random.Random, max_layer: int = 3) -> PartialMCElement:
    k = rng.randint(0, n)
    dom = tuple(sorted(rng.sample(range(1, n + 1), k)))
    img = tuple(sorted(rng.sample(range(1, n + 1), k)))
    return PartialMCElement(n, flavor, dom, img, random_normal_form(k, flavor, rng, max_layer))


# ------------------------------------------------------ equality engines


BASE_OF_RELATION_FLAVOR = {
    "disc-inverse": "disc",
    "disc-inverse-balanced": "disc",
    "disc-inverse-two-gen": "disc",
    "sphere-inverse-braid": "sphere-braid",
    "sphere-inverse-mcg": "sphere-mcg",
    "sphere-inverse-mcg-balanced": "sphere-mcg",
    "sphere-inverse-mcg-two-gen": "sphere-mcg",
}


def equality_engine(relation_flavor: str) -> Callable[[GeneratorWord, GeneratorWord], bool]:
    """The decision procedure used to certify a relation set."""
    if relation_flavor in ("disc-braid", "pure-braid"):
        return ib_equal_disc
    if relation_flavor in ("sphere-braid", "sphere-braid-two-gen"):
        return lambda a, b: normal_form(a, "sphere-braid") == normal_form(b, "sphere-braid")
    if relation_flavor in ("sphere-mcg", "sphere-mcg-two-gen"):
        return lambda a, b: normal_form(a, "sphere-mcg") == normal_form(b, "sphere-mcg")
    if relation_flavor == "symmetric-inverse":
        return lambda a, b: tau_of_word(a) == tau_of_word(b)
    if relation_flavor in BASE_OF_RELATION_FLAVOR:
        base = BASE_OF_RELATION_FLAVOR[relation_flavor]
        return lambda a, b: normalize(a, base) == normalize(b, base)
    raise WordError(f"no equality engine for {relation_flavor!r}")


def tau_homomorphism_holds(e1: PartialMCElement, e2: PartialMCElement) -> bool:
    return multiply(e1, e2).tau() == compose_partial(e1.tau(), e2.tau())


def eps_block_words(k: int, n: int) -> tuple[GeneratorWord, GeneratorWord]:
    """Two spellings of eps_{k+1} ... eps_n: the plain product and the single-letter chain."""
    from .words import eps_block, eps_block_single

    return eps_block(k, n), eps_block_single(k, n)
