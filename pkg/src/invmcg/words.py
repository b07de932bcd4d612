"""Generator words for braid-like monoids.

A word is a finite sequence of letters sigma_i, sigma_i^-1 (1 <= i < n) and
epsilon_i (1 <= i <= n) over an explicit strand count n.  Words are read left
to right: the leftmost letter acts first.  Epsilon letters are idempotent
and never take part in free reduction.

Text grammar: whitespace separated tokens ``name[^k]`` where name is one of
``s<i>`` (sigma_i), ``e<i>`` (epsilon_i), ``e`` (epsilon_1), ``D`` (Garside
half twist), ``g`` (sigma_1 ... sigma_{n-1}), ``E<k>`` (epsilon_{k+1} ...
epsilon_n), ``q<i>,<j>`` (pure generator s_{i,j}) and ``c<k>,<l>`` (coset
word sigma_k^-1 ... sigma_{l-1}^-1).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, NamedTuple, Sequence


class WordError(ValueError):
    """Raised for malformed words, bad indices or rank mismatches."""


class Kind(str, Enum):
    SIGMA = "sigma"
    SIGMA_INV = "sigma-inverse"
    EPSILON = "epsilon"


class GeneratorLetter(NamedTuple):
    kind: Kind
    index: int

    @property
    def is_epsilon(self) -> bool:
        return self.kind is Kind.EPSILON

    def inverse(self) -> "GeneratorLetter":
        if self.kind is Kind.SIGMA:
            return GeneratorLetter(Kind.SIGMA_INV, self.index)
        if self.kind is Kind.SIGMA_INV:
            return GeneratorLetter(Kind.SIGMA, self.index)
        raise WordError(f"epsilon letter e{self.index} has no inverse")

    def signed(self) -> int:
        """Signed index for sigma letters (+i / -i)."""
        if self.kind is Kind.SIGMA:
            return self.index
        if self.kind is Kind.SIGMA_INV:
            return -self.index
        raise WordError("epsilon letter has no signed index")

    def token(self) -> str:
        if self.kind is Kind.EPSILON:
            return f"e{self.index}"
        return f"s{self.index}" if self.kind is Kind.SIGMA else f"s{self.index}^-1"


def sigma(i: int, power: int = 1) -> GeneratorLetter:
    return GeneratorLetter(Kind.SIGMA if power > 0 else Kind.SIGMA_INV, i)


def eps(i: int) -> GeneratorLetter:
    return GeneratorLetter(Kind.EPSILON, i)


def _check_letter(letter: GeneratorLetter, rank: int) -> None:
    if letter.kind is Kind.EPSILON:
        if not 1 <= letter.index <= rank:
            raise WordError(f"e{letter.index} out of range for rank {rank}")
    elif not 1 <= letter.index <= rank - 1:
        raise WordError(f"s{letter.index} out of range for rank {rank}")


@dataclass(frozen=True)
class GeneratorWord:
    rank: int
    letters: tuple[GeneratorLetter, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise WordError("rank must be non-negative")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            _check_letter(letter, self.rank)

    @classmethod
    def from_signed(cls, rank: int, signed: Iterable[int]) -> "GeneratorWord":
        """Build an epsilon-free word from signed sigma indices."""
        return cls(rank, tuple(sigma(abs(a), a) for a in signed))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        _same_rank(self, other)
        return GeneratorWord(self.rank, self.letters + other.letters)

    def __pow__(self, k: int) -> "GeneratorWord":
        if k < 0:
            return self.inverse() ** (-k)
        return GeneratorWord(self.rank, self.letters * k)

    def __str__(self) -> str:
        return print_word(self)

    def inverse(self) -> "GeneratorWord":
        """Group inverse; defined only for epsilon-free words."""
        return GeneratorWord(self.rank, tuple(a.inverse() for a in reversed(self.letters)))

    def reversed_inverse(self) -> "GeneratorWord":
        """Inverse-monoid inverse: reverse, invert sigmas, keep epsilons."""
        return GeneratorWord(
            self.rank,
            tuple(a if a.is_epsilon else a.inverse() for a in reversed(self.letters)),
        )

    @property
    def has_epsilon(self) -> bool:
        return any(a.is_epsilon for a in self.letters)

    def signed(self) -> tuple[int, ...]:
        return tuple(a.signed() for a in self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if a.kind is Kind.SIGMA else -1 for a in self.letters if not a.is_epsilon)


def _same_rank(u: GeneratorWord, v: GeneratorWord) -> None:
    if u.rank != v.rank:
        raise WordError(f"rank mismatch: {u.rank} vs {v.rank}")


def empty(rank: int) -> GeneratorWord:
    return GeneratorWord(rank, ())


def concat(*words: GeneratorWord) -> GeneratorWord:
    if not words:
        raise WordError("concat needs at least one word")
    rank = words[0].rank
    letters: list[GeneratorLetter] = []
    for w in words:
        if w.rank != rank:
            raise WordError(f"rank mismatch: {rank} vs {w.rank}")
        letters.extend(w.letters)
    return GeneratorWord(rank, tuple(letters))


# ---------------------------------------------------------------- reduction


def free_reduce(w: GeneratorWord) -> GeneratorWord:
    """Cancel adjacent sigma_i sigma_i^-1 pairs; epsilon letters are left alone."""
    out: list[GeneratorLetter] = []
    for a in w.letters:
        if (
            out
            and not a.is_epsilon
            and not out[-1].is_epsilon
            and out[-1].index == a.index
            and out[-1].kind is not a.kind
        ):
            out.pop()
        else:
            out.append(a)
    return GeneratorWord(w.rank, tuple(out))


# ------------------------------------------------------------------- macros


def garside(rank: int) -> GeneratorWord:
    """Half twist sigma_1..sigma_{n-1} sigma_1..sigma_{n-2} ... sigma_1."""
    signed = [i for top in range(rank - 1, 0, -1) for i in range(1, top + 1)]
    return GeneratorWord.from_signed(rank, signed)


def sigma_big(rank: int) -> GeneratorWord:
    return GeneratorWord.from_signed(rank, range(1, rank))


def eps_word(i: int, rank: int) -> GeneratorWord:
    """epsilon_i written with the single idempotent epsilon_1.

    Uses epsilon_{i+1} = sigma_i epsilon_i sigma_i^-1.
    """
    if not 1 <= i <= rank:
        raise WordError(f"eps({i}) out of range for rank {rank}")
    letters = [eps(1)]
    for j in range(1, i):
        letters = [sigma(j)] + letters + [sigma(j, -1)]
    return GeneratorWord(rank, tuple(letters))


def eps_block(k: int, rank: int) -> GeneratorWord:
    """epsilon_{k+1} epsilon_{k+2} ... epsilon_n (k = n gives the empty word)."""
    if not 0 <= k <= rank:
        raise WordError(f"eps-block({k}) out of range for rank {rank}")
    return GeneratorWord(rank, tuple(eps(i) for i in range(k + 1, rank + 1)))


def eps_block_single(k: int, rank: int, letter: int | None = None) -> GeneratorWord:
    """epsilon_{k+1,n} as a product of one repeated epsilon and sigma chains.

    The chain is  e . (s_{n-1} ... s_{k+1}) e . (s_{n-1} ... s_{k+2}) e ... (s_{n-1}) e
    with ``e`` the epsilon letter of index ``letter`` (default n, the only
    choice that kills positions k+1..n while leaving 1..k untouched).
    """
    if not 0 <= k < rank:
        raise WordError(f"eps-block({k}) needs 0 <= k < rank")
    e = eps(rank if letter is None else letter)
    letters = [e]
    for m in range(k + 1, rank):
        letters += [sigma(i) for i in range(rank - 1, m - 1, -1)]
        letters.append(e)
    return GeneratorWord(rank, tuple(letters))


def expand_macro(name: str, rank: int, index: int | None = None) -> GeneratorWord:
    if name == "Delta":
        return garside(rank)
    if name == "sigma-big":
        return sigma_big(rank)
    if name == "eps":
        if index is None:
            raise WordError("eps macro needs an index")
        return eps_word(index, rank)
    if name == "eps-block":
        if index is None:
            raise WordError("eps-block macro needs an index")
        return eps_block(index, rank)
    raise WordError(f"unknown macro {name!r}")


def sij_signed(i: int, j: int) -> tuple[int, ...]:
    pre = list(range(j - 1, i, -1))
    return tuple(pre + [i, i] + [-a for a in reversed(pre)])


def expand_sij(i: int, j: int, rank: int) -> GeneratorWord:
    """s_{i,j} = s_{j-1}..s_{i+1} s_i^2 s_{i+1}^-1..s_{j-1}^-1."""
    if not 1 <= i < j <= rank:
        raise WordError(f"q{i},{j} needs 1 <= i < j <= {rank}")
    return GeneratorWord.from_signed(rank, sij_signed(i, j))


def coset_signed(k: int, l: int) -> tuple[int, ...]:
    return tuple(-i for i in range(k, l))


def expand_coset(k: int, l: int, rank: int) -> GeneratorWord:
    """sigma_{k,l} = sigma_k^-1 ... sigma_{l-1}^-1, empty when k = l."""
    if not 1 <= k <= l <= rank:
        raise WordError(f"c{k},{l} needs 1 <= k <= l <= {rank}")
    return GeneratorWord.from_signed(rank, coset_signed(k, l))


# ------------------------------------------------------------ parse / print

_TOKEN = re.compile(
    r"^(?P<name>s(?P<s>\d+)|e(?P<e>\d+)?|D|g|E(?P<E>\d+)|q(?P<qi>\d+),(?P<qj>\d+)|c(?P<ck>\d+),(?P<cl>\d+))"
    r"(?:\^(?P<exp>[+-]?\d+))?$"
)


def _token_word(m: re.Match, rank: int, token: str) -> tuple[GeneratorWord, bool]:
    """Word for the bare token name and whether it contains an epsilon."""
    try:
        if m["s"] is not None:
            return GeneratorWord(rank, (sigma(int(m["s"])),)), False
        if m["name"].startswith("e"):
            return GeneratorWord(rank, (eps(int(m["e"]) if m["e"] else 1),)), True
        if m["name"] == "D":
            return garside(rank), False
        if m["name"] == "g":
            return sigma_big(rank), False
        if m["E"] is not None:
            return eps_block(int(m["E"]), rank), True
        if m["qi"] is not None:
            return expand_sij(int(m["qi"]), int(m["qj"]), rank), False
        return expand_coset(int(m["ck"]), int(m["cl"]), rank), False
    except WordError as exc:
        raise WordError(f"bad token {token!r}: {exc}") from None


def parse_word(text: str, rank: int) -> GeneratorWord:
    if rank < 0:
        raise WordError("rank must be non-negative")
    letters: list[GeneratorLetter] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise WordError(f"unknown token {token!r}")
        base, has_eps = _token_word(m, rank, token)
        k = int(m["exp"]) if m["exp"] is not None else 1
        if has_eps and k < 1:
            raise WordError(f"bad token {token!r}: epsilon is not invertible")
        if k < 0:
            base = base.inverse()
        letters.extend(base.letters * abs(k))
    return GeneratorWord(rank, tuple(letters))


def print_word(w: GeneratorWord) -> str:
    """Inverse of parse_word, collapsing runs of one letter into a power."""
    parts: list[str] = []
    letters = w.letters
    i = 0
    while i < len(letters):
        a = letters[i]
        j = i
        while j < len(letters) and letters[j] == a:
            j += 1
        run = j - i
        if a.is_epsilon:
            parts.append(f"e{a.index}" + (f"^{run}" if run > 1 else ""))
        else:
            power = run if a.kind is Kind.SIGMA else -run
            parts.append(f"s{a.index}" + ("" if power == 1 else f"^{power}"))
        i = j
    return " ".join(parts)


# -------------------------------------------------------- relation database


class Relation(NamedTuple):
    label: str
    lhs: GeneratorWord
    rhs: GeneratorWord


@dataclass(frozen=True)
class RelationSet:
    flavor: str
    rank: int
    pairs: tuple[Relation, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def _w(rank: int, *parts) -> GeneratorWord:
    """Small builder: ints are signed sigmas, ('e', i) is epsilon_i, words splice in."""
    letters: list[GeneratorLetter] = []
    for p in parts:
        if isinstance(p, GeneratorWord):
            letters.extend(p.letters)
        elif isinstance(p, tuple):
            letters.append(eps(p[1]))
        else:
            letters.append(sigma(abs(p), p))
    return GeneratorWord(rank, tuple(letters))


def _chain(label: str, words: Sequence[GeneratorWord]) -> list[Relation]:
    return [Relation(label, words[0], w) for w in words[1:]]


def braid_relations(n: int) -> list[Relation]:
    rels = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(Relation("2.1-commute", _w(n, i, j), _w(n, j, i)))
    for i in range(1, n - 1):
        rels.append(Relation("2.1-braid", _w(n, i, i + 1, i), _w(n, i + 1, i, i + 1)))
    return rels


def _free_cancellation(n: int) -> list[Relation]:
    rels = []
    for i in range(1, n):
        rels.append(Relation("unit", _w(n, i, -i), empty(n)))
        rels.append(Relation("unit", _w(n, -i, i), empty(n)))
    return rels


def inverse_braid_relations(n: int, *, symmetric: bool = False) -> list[Relation]:
    """Easdown-Lavers relations; ``symmetric`` swaps in sigma_i^2 = 1."""
    e = ("e", 1)
    rels = []
    if symmetric:
        rels += [Relation("2.4", _w(n, i, i), empty(n)) for i in range(1, n)]
    else:
        rels += _free_cancellation(n)
    rels += [Relation("2.3-commute", _w(n, e, i), _w(n, i, e)) for i in range(2, n)]
    if n >= 2:
        rels += _chain("2.3-triple", [_w(n, e, 1, e), _w(n, 1, e, 1, e), _w(n, e, 1, e, 1)])
    idem = [_w(n, e), _w(n, e, e)]
    if n >= 2 and not symmetric:
        idem += [_w(n, e, 1, 1), _w(n, 1, 1, e)]
    rels += _chain("2.3-idempotent", idem)
    return rels


def balanced_inverse_relations(n: int) -> list[Relation]:
    rels = _free_cancellation(n)
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append(Relation("2.6-commute", _w(n, ("e", j), i), _w(n, i, ("e", j))))
        rels.append(Relation("2.6-shift", _w(n, ("e", i), i), _w(n, i, ("e", i + 1))))
        rels.append(Relation("2.6-shift", _w(n, ("e", i + 1), i), _w(n, i, ("e", i))))
        e1 = ("e", i + 1)
        rels += _chain("2.6-absorb", [_w(n, e1, i, i), _w(n, i, i, e1), _w(n, e1)])
        pair = [("e", i), ("e", i + 1)]
        rels += _chain("2.6-pair", [_w(n, *pair, i), _w(n, i, *pair), _w(n, *pair)])
    for i in range(1, n + 1):
        rels.append(Relation("2.6-idempotent", _w(n, ("e", i)), _w(n, ("e", i), ("e", i))))
    return rels


def two_generator_braid_relations(n: int) -> list[Relation]:
    s = sigma_big(n)
    si = s.inverse()
    s1 = _w(n, 1)
    rels = []
    for i in range(2, n // 2 + 1):
        rels.append(Relation("2.2-commute", concat(s1, s ** i, s1, si ** i), concat(s ** i, s1, si ** i, s1)))
    rels.append(Relation("2.2-power", s ** n, concat(s, s1) ** (n - 1)))
    return rels


def two_generator_inverse_relations(n: int) -> list[Relation]:
    s = sigma_big(n)
    si = s.inverse()
    e = ("e", 1)
    rels = _free_cancellation(n)[:2] if n >= 2 else []
    rels.append(Relation("2.7-unit", concat(s, si), empty(n)))
    rels.append(Relation("2.7-unit", concat(si, s), empty(n)))
    for i in range(1, n - 1):
        conj = concat(s ** i, _w(n, 1), si ** i)
        rels.append(Relation("2.7-commute", _w(n, e, conj), _w(n, conj, e)))
    if n >= 2:
        rels += _chain("2.7-triple", [_w(n, e, 1, e), _w(n, 1, e, 1, e), _w(n, e, 1, e, 1)])
        rels += _chain("2.7-idempotent", [_w(n, e), _w(n, e, e), _w(n, e, 1, 1), _w(n, 1, 1, e)])
    return rels


def sphere_relation(n: int) -> Relation:
    signed = list(range(1, n)) + list(range(n - 1, 0, -1))
    return Relation("4.1", GeneratorWord.from_signed(n, signed), empty(n))


def mcg_relation(n: int) -> Relation:
    return Relation("4.2", sigma_big(n) ** n, empty(n))


def two_generator_mcg_relations(n: int) -> list[Relation]:
    s = sigma_big(n)
    return [
        Relation("4.3-power", s ** n, empty(n)),
        Relation("4.3-twist", concat(_w(n, -1), s) ** (n - 1), empty(n)),
    ]


def two_generator_sphere_relation(n: int) -> Relation:
    s = sigma_big(n)
    return Relation("4.1-two-gen", concat(s ** n, concat(_w(n, -1), s) ** (1 - n)), empty(n))


def burau_relations(n: int) -> list[Relation]:
    from itertools import combinations

    def s(i, j):
        return expand_sij(i, j, n)

    rels = []
    for i, j, k, l in combinations(range(1, n + 1), 4):
        rels.append(Relation("5.1-disjoint", concat(s(i, j), s(k, l)), concat(s(k, l), s(i, j))))
        rels.append(Relation("5.1-nested", concat(s(i, l), s(j, k)), concat(s(j, k), s(i, l))))
        rels.append(Relation(
            "5.1-conjugate",
            concat(s(i, k), s(j, k), s(j, l), s(j, k).inverse()),
            concat(s(j, k), s(j, l), s(j, k).inverse(), s(i, k)),
        ))
    for i, j, k in combinations(range(1, n + 1), 3):
        rels.append(Relation("5.1-cyclic", concat(s(i, j), s(i, k), s(j, k)), concat(s(i, k), s(j, k), s(i, j))))
        rels.append(Relation("5.1-cyclic", concat(s(i, k), s(j, k), s(i, j)), concat(s(j, k), s(i, j), s(i, k))))
    return rels


def _sphere_extras(n: int, mcg: bool) -> list[Relation]:
    rels = [sphere_relation(n)]
    if mcg:
        rels.append(mcg_relation(n))
    return rels


_BUILDERS: dict[str, Callable[[int], list[Relation]]] = {
    "disc-braid": braid_relations,
    "disc-inverse": lambda n: braid_relations(n) + inverse_braid_relations(n),
    "sphere-braid": lambda n: braid_relations(n) + _sphere_extras(n, False),
    "sphere-mcg": lambda n: braid_relations(n) + _sphere_extras(n, True),
    "sphere-inverse-braid": lambda n: braid_relations(n) + inverse_braid_relations(n) + _sphere_extras(n, False),
    "sphere-inverse-mcg": lambda n: braid_relations(n) + inverse_braid_relations(n) + _sphere_extras(n, True),
    "symmetric-inverse": lambda n: braid_relations(n) + inverse_braid_relations(n, symmetric=True),
    # alternative presentations of the same objects
    "disc-inverse-balanced": lambda n: braid_relations(n) + balanced_inverse_relations(n),
    "disc-inverse-two-gen": lambda n: two_generator_braid_relations(n) + two_generator_inverse_relations(n),
    "sphere-braid-two-gen": lambda n: two_generator_braid_relations(n) + [two_generator_sphere_relation(n)],
    "sphere-mcg-two-gen": lambda n: two_generator_braid_relations(n) + two_generator_mcg_relations(n),
    "sphere-inverse-mcg-balanced": lambda n: braid_relations(n) + balanced_inverse_relations(n) + _sphere_extras(n, True),
    "sphere-inverse-mcg-two-gen": lambda n: (
        two_generator_braid_relations(n) + two_generator_inverse_relations(n) + two_generator_mcg_relations(n)
    ),
    "pure-braid": burau_relations,
}

RELATION_FLAVORS = tuple(_BUILDERS)


def relations(flavor: str, rank: int) -> RelationSet:
    if flavor not in _BUILDERS:
        raise WordError(f"unknown relation flavor {flavor!r}")
    if rank < 2:
        raise WordError("relation sets need rank >= 2")
    return RelationSet(flavor, rank, tuple(_BUILDERS[flavor](rank)))


class RelationReport(NamedTuple):
    flavor: str
    rank: int
    results: tuple[tuple[Relation, bool], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.results)

    def failures(self) -> list[Relation]:
        return [rel for rel, passed in self.results if not passed]


def check_relations(rels: RelationSet, eq: Callable[[GeneratorWord, GeneratorWord], bool]) -> RelationReport:
    return RelationReport(rels.flavor, rels.rank, tuple((rel, bool(eq(rel.lhs, rel.rhs))) for rel in rels))


# ------------------------------------------------------------ random words


def random_word(
    rank: int,
    length: int,
    rng: random.Random,
    *,
    eps_rate: float = 0.0,
) -> GeneratorWord:
    """Uniform random word; each letter is an epsilon with probability eps_rate.

    Below rank 2 there are no sigmas: the word is all epsilons, or empty
    when eps_rate is 0.
    """
    if rank < 2 and eps_rate == 0:
        return GeneratorWord(rank, ())
    letters = []
    for _ in range(length):
        if rank >= 1 and (rank < 2 or rng.random() < eps_rate):
            letters.append(eps(rng.randint(1, rank)))
        elif rank >= 2:
            letters.append(sigma(rng.randint(1, rank - 1), rng.choice((1, -1))))
    return GeneratorWord(rank, tuple(letters))


def perturb(w: GeneratorWord, rels: RelationSet, rng: random.Random, steps: int = 3) -> GeneratorWord:
    """Apply random relation moves; the result is equal to w in the presented monoid."""
    letters = list(w.letters)
    for _ in range(steps):
        rel = rng.choice(rels.pairs)
        lhs, rhs = (rel.lhs.letters, rel.rhs.letters)
        if rng.random() < 0.5:
            lhs, rhs = rhs, lhs
        spots = [i for i in range(len(letters) - len(lhs) + 1) if tuple(letters[i:i + len(lhs)]) == lhs]
        if spots and lhs:
            i = rng.choice(spots)
            letters[i:i + len(lhs)] = rhs
        elif not lhs:
            i = rng.randint(0, len(letters))
            letters[i:i] = rhs
        else:
            # insert a trivial pair somewhere instead
            i = rng.randint(0, len(letters))
            if w.rank >= 2:
                a = sigma(rng.randint(1, w.rank - 1), rng.choice((1, -1)))
                letters[i:i] = [a, a.inverse()]
    return GeneratorWord(w.rank, tuple(letters))
