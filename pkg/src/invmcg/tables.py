"""Finite multiplication tables and an isomorphism search between them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence, TypeVar

T = TypeVar("T", bound=Hashable)


@dataclass(frozen=True)
class MultiplicationTable:
    labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]  # rows[a][b] = index of a * b

    @classmethod
    def build(cls, elements: Sequence[T], multiply: Callable[[T, T], T], label=str) -> "MultiplicationTable":
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("elements are not distinct")
        rows = []
        for a in elements:
            row = []
            for b in elements:
                c = multiply(a, b)
                if c not in index:
                    raise ValueError(f"product {label(a)} * {label(b)} = {label(c)} falls outside the set")
                row.append(index[c])
            rows.append(tuple(row))
        return cls(tuple(label(e) for e in elements), tuple(rows))

    def __len__(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def is_associative(self) -> bool:
        r = self.rows
        n = len(r)
        return all(r[r[a][b]][c] == r[a][r[b][c]] for a in range(n) for b in range(n) for c in range(n))

    def identity(self) -> int | None:
        n = len(self)
        for e in range(n):
            if all(self.rows[e][a] == a and self.rows[a][e] == a for a in range(n)):
                return e
        return None

    def idempotents(self) -> list[int]:
        return [a for a in range(len(self)) if self.rows[a][a] == a]

    def is_central(self, a: int) -> bool:
        return all(self.rows[a][b] == self.rows[b][a] for b in range(len(self)))

    def order(self, a: int) -> int | None:
        """Multiplicative order, when a generates a cyclic group through the identity."""
        e = self.identity()
        x, k = a, 1
        while k <= len(self):
            if x == e:
                return k
            x = self.rows[x][a]
            k += 1
        return None

    def names(self) -> list[str]:
        return [f"x{i}" for i in range(len(self))]

    def legend(self) -> list[str]:
        return [f"x{i} = {label}" for i, label in enumerate(self.labels)]

    def lines(self) -> list[str]:
        """One ``a * b = c`` line per ordered pair, over the short names."""
        N = self.names()
        return [f"{N[a]} * {N[b]} = {N[self.rows[a][b]]}" for a in range(len(self)) for b in range(len(self))]

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "rows": [list(r) for r in self.rows]}


def _invariant(t: MultiplicationTable, a: int) -> tuple:
    n = len(t)
    right = len({t.rows[a][b] for b in range(n)})
    left = len({t.rows[b][a] for b in range(n)})
    powers = [a]
    while True:
        nxt = t.rows[powers[-1]][a]
        if nxt in powers:
            tail = len(powers) - powers.index(nxt)
            break
        powers.append(nxt)
    return (t.rows[a][a] == a, right, left, len(powers), tail, t.is_central(a))


def _generators(t: MultiplicationTable) -> list[int]:
    n = len(t)
    order = sorted(range(n), key=lambda a: (-_invariant(t, a)[1] - _invariant(t, a)[2], a))
    gens: list[int] = []
    reached: set[int] = set()
    for a in order:
        if a in reached:
            continue
        gens.append(a)
        frontier = list(reached | {a})
        reached |= {a}
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    for y in (t.rows[x][g], t.rows[g][x]):
                        if y not in reached:
                            reached.add(y)
                            nxt.append(y)
            frontier = nxt
    return gens


def find_isomorphism(a: MultiplicationTable, b: MultiplicationTable) -> list[int] | None:
    """A bijection f with f(x*y) = f(x)*f(y), as a list indexed by a's elements."""
    n = len(a)
    if n != len(b):
        return None
    inv_a = [_invariant(a, x) for x in range(n)]
    inv_b = [_invariant(b, x) for x in range(n)]
    if sorted(inv_a) != sorted(inv_b):
        return None
    gens = _generators(a)
    candidates = [[y for y in range(n) if inv_b[y] == inv_a[g]] for g in gens]

    def extend(choice: Sequence[int]) -> list[int] | None:
        f: dict[int, int] = dict(zip(gens, choice))
        if len(set(f.values())) != len(f):
            return None
        frontier = list(f)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    for p, q in ((a.rows[x][g], b.rows[f[x]][f[g]]), (a.rows[g][x], b.rows[f[g]][f[x]])):
                        if p in f:
                            if f[p] != q:
                                return None
                        else:
                            f[p] = q
                            nxt.append(p)
            frontier = nxt
        if len(f) != n or len(set(f.values())) != n:
            return None
        mapping = [f[x] for x in range(n)]
        for x in range(n):
            for y in range(n):
                if mapping[a.rows[x][y]] != b.rows[mapping[x]][mapping[y]]:
                    return None
        return mapping

    for choice in itertools.product(*candidates):
        found = extend(choice)
        if found is not None:
            return found
    return None

