"""Linear extensions of a poset and their descent statistics."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExplosionError
from .poset import Poset, hasse_components, mask_of
from .qpoly import QPolynomial

DEFAULT_CAP = 10_000_000


@dataclass(frozen=True)
class LinearExtension:
    """A compatible listing w with its descent data.

    des_set is Des(w); maj sums the descent positions; des_p sums, over
    descent positions i, the Hasse component count of the prefix w[:i].
    """

    w: tuple[int, ...]
    des_set: tuple[int, ...]
    maj: int
    des_p: int

    @property
    def n(self) -> int:
        return len(self.w)

    def prefix_mask(self, i: int) -> int:
        return mask_of(self.w[:i])


def _statistics(P: Poset, w) -> LinearExtension:
    des = tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])
    des_p = sum(len(hasse_components(P, mask_of(w[:i]))) for i in des)
    return LinearExtension(tuple(w), des, sum(des), des_p)


def linear_extensions(P: Poset, cap: int = DEFAULT_CAP) -> list[LinearExtension]:
    """All linear extensions in lexicographic order of w, with statistics.

    Raises ExplosionError when more than cap extensions exist.
    """
    if count_extensions(P) > cap:
        raise ExplosionError(f"|L(P)| exceeds cap {cap}")
    out = []
    w: list[int] = []

    def extend(taken: int):
        if len(w) == P.n:
            out.append(_statistics(P, w))
            return
        for p in P.minimal_elements(P.full_mask & ~taken):
            w.append(p)
            extend(taken | (1 << (p - 1)))
            w.pop()

    extend(0)
    return out


def count_extensions(P: Poset) -> int:
    """Exact |L(P)| by dynamic programming over the ideal lattice
    (number of maximal chains from the empty ideal to the full one)."""
    counts = {0: 1}
    frontier = [0]
    while frontier:
        by_size: dict[int, int] = {}
        for ideal in frontier:
            c = counts[ideal]
            for p in P.minimal_elements(P.full_mask & ~ideal):
                grown = ideal | (1 << (p - 1))
                by_size[grown] = by_size.get(grown, 0) + c
        for ideal, c in by_size.items():
            counts[ideal] = counts.get(ideal, 0) + c
        frontier = list(by_size)
    return counts[P.full_mask]


def maj_polynomial(P: Poset, cap: int = DEFAULT_CAP) -> QPolynomial:
    """Sum over L(P) of q^maj(w), by enumeration."""
    coeffs = [0] * (P.n * (P.n - 1) // 2 + 1)
    for ext in linear_extensions(P, cap=cap):
        coeffs[ext.maj] += 1
    return QPolynomial(tuple(coeffs))
