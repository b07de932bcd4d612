"""Reduced words in a free group on x_1, x_2, ...

Words are tuples of non-zero ints: ``+i`` is x_i and ``-i`` is x_i^-1.
Everything here returns freely reduced tuples.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Word = tuple[int, ...]


def reduce(w: Iterable[int]) -> Word:
    out: list[int] = []
    for a in w:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def mul(*ws: Sequence[int]) -> Word:
    out: list[int] = []
    for w in ws:
        for a in w:
            if out and out[-1] == -a:
                out.pop()
            else:
                out.append(a)
    return tuple(out)


def inv(w: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(w))


def power(w: Sequence[int], k: int) -> Word:
    if k < 0:
        return power(inv(w), -k)
    return mul(*([w] * k))


def substitute(w: Sequence[int], images: Mapping[int, Sequence[int]]) -> Word:
    """Apply the endomorphism x_i -> images[i]; letters missing from images stay."""
    out: list[int] = []
    for a in w:
        g = abs(a)
        piece = images.get(g, (g,))
        if a < 0:
            piece = inv(piece)
        for b in piece:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return tuple(out)


def kill(w: Sequence[int], dead: Iterable[int]) -> Word:
    """Set the generators in ``dead`` to 1."""
    dead = set(dead)
    return reduce(a for a in w if abs(a) not in dead)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def cyclic_key(w: Sequence[int]) -> Word:
    """Canonical representative of the conjugacy class: least rotation of the cyclic reduction."""
    c = cyclic_reduce(w)
    if not c:
        return c
    return min(c[i:] + c[:i] for i in range(len(c)))


def split_conjugate(w: Sequence[int], x: int) -> Word | None:
    """If w = u^-1 x u (reduced), return the u that does not start with x^{+-1}."""
    w = tuple(w)
    if len(w) % 2 == 0:
        return None
    m = len(w) // 2
    if w[m] != x:
        return None
    u = w[m + 1:]
    if inv(u) != w[:m]:
        return None
    return u


def centralizer_power(w: Sequence[int], x: int) -> int | None:
    """If w = x^k y x^-k for a single letter y != x^{+-1}, return k."""
    w = tuple(w)
    k = 0
    while k < len(w) and w[k] == x:
        k += 1
    if k == 0:
        while k < len(w) and w[k] == -x:
            k += 1
        sign = -1
    else:
        sign = 1
    rest = w[k:]
    if len(rest) != 1 + k or any(a != -sign * x for a in rest[1:]):
        return None
    return sign * k


def to_text(w: Sequence[int], letter: str = "x") -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = (j - i) * (1 if w[i] > 0 else -1)
        name = f"{letter}{abs(w[i])}"
        parts.append(name if run == 1 else f"{name}^{run}")
        i = j
    return " ".join(parts)
