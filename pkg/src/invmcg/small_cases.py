"""Small exact oracles: finite tower tables, I_n, Todd-Coxeter, and IM_{1,1}.

IM_{1,1} is modelled as the disjoint union of B_3 (the full part) and
SL_2(Z) (the part with the marked point forgotten).  A braid acts on a
matrix through rho on whichever side it sits.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .partial import compose, enumerate_In
from .sphere import MarkovNormalForm, normal_form
from .tables import MultiplicationTable, find_isomorphism
from .tower import elements, multiply
from .words import GeneratorWord, WordError, garside

ISO_SIZE_LIMIT = 40
TOWER_ENUMERATION_LIMIT = 3

Matrix = tuple[tuple[int, int], tuple[int, int]]
IDENTITY: Matrix = ((1, 0), (0, 1))

# sigma_1 and sigma_2 on the homology of the torus
RHO_GENERATORS: dict[int, Matrix] = {
    1: ((1, 1), (0, 1)),
    -1: ((1, -1), (0, 1)),
    2: ((1, 0), (-1, 1)),
    -2: ((1, 0), (1, 1)),
}


def enumerate_im0n(n: int) -> MultiplicationTable:
    if not 0 <= n <= TOWER_ENUMERATION_LIMIT:
        raise WordError(f"IM_0,n tables are enumerated for n <= {TOWER_ENUMERATION_LIMIT}")
    return MultiplicationTable.build(list(elements(n, "sphere-mcg")), multiply)


def symmetric_inverse_table(n: int) -> MultiplicationTable:
    return MultiplicationTable.build(enumerate_In(n), compose)


def iso_check(a: MultiplicationTable, b: MultiplicationTable) -> tuple[bool, list[int] | None]:
    if max(len(a), len(b)) > ISO_SIZE_LIMIT:
        raise WordError(f"iso_check is limited to tables of size <= {ISO_SIZE_LIMIT}")
    witness = find_isomorphism(a, b)
    return witness is not None, witness


# ------------------------------------------------------------ Todd-Coxeter


def coset_count(ngens: int, relators: Sequence[Sequence[int]], max_cosets: int = 100_000) -> int:
    """Order of the group <x_1..x_ngens | relators>, by HLT coset enumeration over the trivial subgroup."""
    gens = [g for i in range(1, ngens + 1) for g in (i, -i)]
    table: list[dict[int, int]] = [{}]
    parent = [0]

    def find(c: int) -> int:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def define(c: int, g: int) -> int:
        if len(table) >= max_cosets:
            raise RuntimeError("coset enumeration exceeded its limit")
        new = len(table)
        table.append({})
        parent.append(new)
        table[c][g] = new
        table[new][-g] = c
        return new

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []

        def merge(x: int, y: int) -> None:
            x, y = find(x), find(y)
            if x == y:
                return
            if x > y:
                x, y = y, x
            parent[y] = x
            queue.append(y)

        merge(a, b)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for g, f in list(table[e].items()):
                if table[f].get(-g) == e:
                    del table[f][-g]
                e1, f1 = find(e), find(f)
                if g in table[e1]:
                    merge(f1, table[e1][g])
                elif -g in table[f1]:
                    merge(e1, table[f1][-g])
                else:
                    table[e1][g] = f1
                    table[f1][-g] = e1
            table[e] = {}

    def scan_and_fill(c: int, w: Sequence[int]) -> None:
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and w[i] in table[f]:
                f = find(table[f][w[i]])
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and -w[j] in table[b]:
                b = find(table[b][-w[j]])
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][-w[i]] = f
                return
            define(f, w[i])

    c = 0
    while c < len(table):
        for r in relators:
            if find(c) != c:
                break
            scan_and_fill(c, r)
        if find(c) == c:
            for g in gens:
                if g not in table[c]:
                    define(c, g)
        c += 1
    return sum(1 for c in range(len(table)) if find(c) == c)


def relators_of(flavor: str, n: int) -> list[tuple[int, ...]]:
    from .words import relations

    out = []
    for rel in relations(flavor, n):
        out.append(rel.lhs.signed() + rel.rhs.inverse().signed())
    return out


# ------------------------------------------------------------------ IM_{1,1}


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def det(a: Matrix) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def mat_text(a: Matrix) -> str:
    return f"[[{a[0][0]},{a[0][1]}],[{a[1][0]},{a[1][1]}]]"


def rho(w: GeneratorWord) -> Matrix:
    if w.has_epsilon:
        raise WordError("rho is defined on braids only")
    if w.rank != 3:
        raise WordError("rho is defined on three-strand braids")
    m = IDENTITY
    for a in w.signed():
        m = mat_mul(m, RHO_GENERATORS[a])
    return m


@dataclass(frozen=True)
class IM11Element:
    tag: str  # "full" or "empty"
    braid: MarkovNormalForm | None = None
    matrix: Matrix | None = None

    def __post_init__(self):
        if self.tag == "full":
            if self.braid is None or self.matrix is not None or self.braid.rank != 3:
                raise ValueError("a full element carries a three-strand braid only")
        elif self.tag == "empty":
            if self.matrix is None or self.braid is not None:
                raise ValueError("an empty element carries a matrix only")
            if det(self.matrix) != 1:
                raise ValueError("matrix must have determinant 1")
        else:
            raise ValueError(f"unknown tag {self.tag!r}")

    @classmethod
    def full(cls, w: GeneratorWord) -> "IM11Element":
        return cls("full", braid=normal_form(w, "disc"))

    @classmethod
    def empty(cls, m: Matrix) -> "IM11Element":
        return cls("empty", matrix=m)

    def __mul__(self, other: "IM11Element") -> "IM11Element":
        return im11_multiply(self, other)

    def __str__(self) -> str:
        if self.tag == "full":
            return f"full {self.braid}"
        return f"empty {mat_text(self.matrix)}"


def im11_multiply(e1: IM11Element, e2: IM11Element) -> IM11Element:
    if e1.tag == "full" and e2.tag == "full":
        return IM11Element.full(e1.braid.word() + e2.braid.word())
    if e1.tag == "empty" and e2.tag == "full":
        return IM11Element.empty(mat_mul(e1.matrix, rho(e2.braid.word())))
    if e1.tag == "full" and e2.tag == "empty":
        return IM11Element.empty(mat_mul(rho(e1.braid.word()), e2.matrix))
    return IM11Element.empty(mat_mul(e1.matrix, e2.matrix))


def random_im11(rng: random.Random, length: int = 6) -> IM11Element:
    from .words import random_word

    w = random_word(3, rng.randint(0, length), rng)
    if rng.random() < 0.5:
        return IM11Element.full(w)
    return IM11Element.empty(rho(w))


def delta_fourth() -> GeneratorWord:
    return garside(3) ** 4
