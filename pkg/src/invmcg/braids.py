"""Signed-index braid words and the point-pushing machinery behind combing.

Braid words here are tuples of signed ints (+i = sigma_i, -i = sigma_i^-1).
Layer words are tuples of signed ints too, where, inside layer j, the letter
+k stands for s_{j,k} and -k for its inverse.

Combing reads off the first layer of a pure braid through its action on the
free group.  Conjugate the Artin image so that x_1 is fixed, then fill the
first puncture (and, on the sphere, cap off the boundary).  A braid that
only pushes strand 1 around acts on what is left by an inner automorphism,
and the conjugating element, rewritten in the basis given by the images of
s_{1,2}, s_{1,3}, ..., is the layer word.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from . import freegroup as fg
from .free_rep import artin_images
from .freegroup import Word
from .words import sij_signed


def inverse(signed: Sequence[int]) -> tuple[int, ...]:
    return tuple(-a for a in reversed(signed))


def permutation(signed: Sequence[int], n: int) -> tuple[int, ...]:
    """Left-to-right permutation: result[p - 1] is where the strand starting at p ends."""
    at = list(range(1, n + 1))
    for a in signed:
        i = abs(a)
        at[i - 1], at[i] = at[i], at[i - 1]
    ends = [0] * n
    for pos, start in enumerate(at, 1):
        ends[start - 1] = pos
    return tuple(ends)


def is_pure(signed: Sequence[int], n: int) -> bool:
    return permutation(signed, n) == tuple(range(1, n + 1))


def delete_strands(signed: Sequence[int], n: int, dead: Iterable[int]) -> tuple[int, ...]:
    """Drop the strands that start at the positions in ``dead``.

    Crossings touching a dead strand disappear; surviving strands are
    renumbered in order.  The result is a word on n - |dead| strands.
    """
    dead = set(dead)
    if not dead:
        return tuple(signed)
    at = list(range(1, n + 1))
    out = []
    for a in signed:
        i = abs(a)
        left, right = at[i - 1], at[i]
        if left not in dead and right not in dead:
            idx = 1 + sum(1 for s in at[: i - 1] if s not in dead)
            out.append(idx if a > 0 else -idx)
        at[i - 1], at[i] = right, left
    return tuple(out)


def layer_expansion(layer: Sequence[int], j: int) -> tuple[int, ...]:
    out: list[int] = []
    for a in layer:
        piece = sij_signed(j, abs(a))
        out.extend(piece if a > 0 else inverse(piece))
    return tuple(out)


def layers_expansion(layers: Sequence[Sequence[int]], first: int = 1) -> tuple[int, ...]:
    out: list[int] = []
    for offset, layer in enumerate(layers):
        out.extend(layer_expansion(layer, first + offset))
    return tuple(out)


def shift_layer(layer: Sequence[int], by: int = 1) -> tuple[int, ...]:
    return tuple(a + by if a > 0 else a - by for a in layer)


# ------------------------------------------------------------ point pushing


def _free_gens(n: int, sphere: bool) -> range:
    return range(2, n) if sphere else range(2, n + 1)


def normalized_action(signed: Sequence[int], n: int, sphere: bool) -> dict[int, Word]:
    """Action of a pure braid on the group of the surface with puncture 1 as base point."""
    images = artin_images(tuple(signed), n)
    u = fg.split_conjugate(images[1], 1)
    if u is None:
        raise ValueError("braid does not fix the first puncture")
    sub = {1: ()}
    if sphere:
        sub[n] = fg.inv(tuple(range(2, n)))
    ui = fg.inv(u)
    return {j: fg.substitute(fg.mul(u, images[j], ui), sub) for j in _free_gens(n, sphere)}


def inner_conjugator(action: dict[int, Word]) -> Word | None:
    """The l with action[j] = l x_j l^-1 for every j, or None if not inner."""
    gens = sorted(action)
    j0 = gens[0]
    u = fg.split_conjugate(action[j0], j0)
    if u is None:
        return None
    ell = fg.inv(u)
    if len(gens) > 1:
        j1 = gens[1]
        m = fg.centralizer_power(fg.mul(u, action[j1], ell), j0)
        if m is None:
            return None
        ell = fg.mul(ell, fg.power((j0,), m))
    ell_inv = fg.inv(ell)
    for j in gens:
        if fg.mul(ell, (j,), ell_inv) != action[j]:
            return None
    return ell


@lru_cache(maxsize=None)
def push_basis(n: int, sphere: bool) -> dict[int, Word]:
    """x_j written in the conjugators L_k of s_{1,k}; letters +k stand for L_k."""
    conj = {}
    for k in _free_gens(n, sphere):
        ell = inner_conjugator(normalized_action(sij_signed(1, k), n, sphere))
        if ell is None:
            raise AssertionError(f"s_1,{k} does not act by an inner automorphism")
        conj[k] = ell
    inverse_map: dict[int, Word] = {}
    for k in _free_gens(n, sphere):
        ell = conj[k]
        spots = [p for p, a in enumerate(ell) if abs(a) == k]
        if len(spots) != 1 or any(abs(a) > k for a in ell):
            raise AssertionError(f"push basis is not triangular at L_{k}: {ell}")
        p = spots[0]
        before = fg.substitute(ell[:p], inverse_map)
        after = fg.substitute(ell[p + 1:], inverse_map)
        core = fg.mul(fg.inv(before), (k,), fg.inv(after))
        inverse_map[k] = core if ell[p] > 0 else fg.inv(core)
    return inverse_map


def first_layer(signed: Sequence[int], n: int, sphere: bool) -> tuple[int, ...]:
    """Layer word w with signed = s_{1,*}-word, given that signed only pushes strand 1."""
    ell = inner_conjugator(normalized_action(signed, n, sphere))
    if ell is None:
        raise AssertionError("element is not a push of the first strand")
    in_basis = fg.substitute(ell, push_basis(n, sphere))
    # conjugators compose in the opposite order to the braid letters
    return tuple(reversed(in_basis))


def comb(signed: Sequence[int], n: int, sphere: bool) -> tuple[tuple[int, ...], ...]:
    """Layers of a pure braid.

    Disc: n - 1 layers, layer j over s_{j,j+1..n}.  Sphere: n - 3 layers,
    layer j over s_{j,j+1..n-1}; a central full twist is invisible here.
    """
    if sphere and n <= 3:
        return ()
    if not sphere and n <= 1:
        return ()
    if not sphere and n == 2:
        total = sum(1 if a > 0 else -1 for a in signed)
        return ((2,) * (total // 2) if total >= 0 else (-2,) * (-total // 2),)
    rest = comb(delete_strands(signed, n, {1}), n - 1, sphere)
    rest = tuple(shift_layer(layer) for layer in rest)
    rho = layers_expansion(rest, first=2)
    first = first_layer(tuple(signed) + inverse(rho), n, sphere)
    return (fg.reduce(first),) + rest
