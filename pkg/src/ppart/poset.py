"""Finite posets on {1..n} with order-ideal machinery.

Elements are labelled 1..n and subsets are stored as n-bit masks
(element p occupies bit p-1), so all ideal arithmetic is word-sized.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CycleError, PosetSyntaxError, RangeError

MAX_ELEMENTS = 64


def mask_of(elements) -> int:
    """Bitmask of an iterable of labels."""
    m = 0
    for p in elements:
        m |= 1 << (p - 1)
    return m


def members(mask: int) -> list[int]:
    """Sorted labels present in a bitmask."""
    out = []
    p = 1
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def ideal_key(mask: int) -> tuple[int, int]:
    """Canonical sort key for ideal sets: cardinality, then mask value."""
    return (mask.bit_count(), mask)


class Poset:
    """A partial order on {1..n}, stored via covers plus reachability masks."""

    def __init__(self, n: int, relations=()):
        if not 1 <= n <= MAX_ELEMENTS:
            raise RangeError(f"element count {n} outside 1..{MAX_ELEMENTS}")
        self.n = n
        strict = [0] * (n + 1)  # strict[a] = mask of {b : a < b}
        for a, b in relations:
            if not (1 <= a <= n and 1 <= b <= n):
                raise RangeError(f"label out of range in relation {a} {b}")
            if a == b:
                raise CycleError(f"relation {a} < {a} is a loop")
            strict[a] |= 1 << (b - 1)
        # Warshall closure on the up-sets.
        for k in range(1, n + 1):
            kbit = 1 << (k - 1)
            for a in range(1, n + 1):
                if strict[a] & kbit:
                    strict[a] |= strict[k]
        for a in range(1, n + 1):
            if strict[a] & (1 << (a - 1)):
                raise CycleError("relation digraph has a directed cycle")
        self._up_strict = strict
        self._down_strict = [0] * (n + 1)
        for a in range(1, n + 1):
            for b in members(strict[a]):
                self._down_strict[b] |= 1 << (a - 1)
        covers = set()
        for a in range(1, n + 1):
            for b in members(strict[a]):
                between = strict[a] & self._down_strict[b]
                if not between:
                    covers.add((a, b))
        self.covers = frozenset(covers)
        # Undirected Hasse adjacency, for component computations.
        self._adj = [0] * (n + 1)
        for a, b in covers:
            self._adj[a] |= 1 << (b - 1)
            self._adj[b] |= 1 << (a - 1)
        self.full_mask = (1 << n) - 1

    # -- comparabilities ------------------------------------------------

    def lt(self, a: int, b: int) -> bool:
        return bool(self._up_strict[a] & (1 << (b - 1)))

    def leq(self, a: int, b: int) -> bool:
        return a == b or self.lt(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.lt(a, b) or self.lt(b, a)

    def up_strict(self, a: int) -> int:
        """Mask of {b : a <_P b}."""
        return self._up_strict[a]

    def down_strict(self, a: int) -> int:
        """Mask of {b : b <_P a}."""
        return self._down_strict[a]

    def down_set(self, mask: int) -> int:
        """Smallest order ideal containing the given set."""
        out = mask
        for p in members(mask):
            out |= self._down_strict[p]
        return out

    def minimal_elements(self, mask: int) -> list[int]:
        return [p for p in members(mask) if not (self._down_strict[p] & mask)]

    def maximal_elements(self, mask: int) -> list[int]:
        return [p for p in members(mask) if not (self._up_strict[p] & mask)]

    # -- dunder / misc --------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and self.covers == other.covers
        )

    def __hash__(self):
        return hash((self.n, self.covers))

    def __repr__(self):
        cov = sorted(self.covers)
        return f"Poset(n={self.n}, covers={cov})"


# -- parsing ------------------------------------------------------------


def parse_poset(text: str) -> Poset:
    """Parse the poset file format: 'n <int>' then '<a> <b>' relation lines.

    '#' starts a comment, blank lines are ignored, relations need not
    be covers (the transitive reduction is computed).
    """
    n = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise PosetSyntaxError(f"line {lineno}: expected 'n <int>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise PosetSyntaxError(f"line {lineno}: bad element count {parts[1]!r}")
        else:
            if len(parts) != 2:
                raise PosetSyntaxError(f"line {lineno}: expected '<a> <b>', got {raw!r}")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise PosetSyntaxError(f"line {lineno}: non-integer labels in {raw!r}")
            relations.append((a, b))
    if n is None:
        raise PosetSyntaxError("missing 'n <int>' header line")
    return Poset(n, relations)


# -- ideals and components ----------------------------------------------


def is_ideal(P: Poset, mask: int) -> bool:
    """True iff the set is downward closed in P."""
    for p in members(mask):
        if P.down_strict(p) & ~mask:
            return False
    return True


def hasse_components(P: Poset, mask: int) -> list[int]:
    """Connected components of the cover graph restricted to the set.

    Returned in increasing order of minimum element; the list length
    is the statistic c_P of the set.
    """
    comps = []
    remaining = mask
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grown = comp
            for p in members(frontier):
                grown |= P._adj[p] & mask
            frontier = grown & ~comp
            comp = grown
        comps.append(comp)
        remaining &= ~comp
    return comps


def c_p(P: Poset, mask: int) -> int:
    return len(hasse_components(P, mask))


def iter_ideals(P: Poset):
    """All order ideals of P (including the empty one), by BFS over the
    ideal lattice from the bottom, adding minimal elements of the complement."""
    seen = {0}
    frontier = [0]
    yield 0
    while frontier:
        nxt = []
        for ideal in frontier:
            comp = P.full_mask & ~ideal
            for p in P.minimal_elements(comp):
                grown = ideal | (1 << (p - 1))
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
                    yield grown
        frontier = nxt


def connected_ideals(P: Poset) -> list[int]:
    """All nonempty connected order ideals, sorted by (size, mask)."""
    out = [J for J in iter_ideals(P) if J and len(hasse_components(P, J)) == 1]
    out.sort(key=ideal_key)
    return out


def principal_ideal(P: Poset, p: int) -> int:
    if not 1 <= p <= P.n:
        raise RangeError(f"element {p} outside 1..{P.n}")
    return P.down_strict(p) | (1 << (p - 1))


@dataclass(frozen=True)
class PiPair:
    """A pair of connected order ideals intersecting nontrivially."""

    j1: int
    j2: int
    union: int
    intersection_components: tuple[int, ...]

    @property
    def intersection(self) -> int:
        return self.j1 & self.j2


def trivially_intersecting(j1: int, j2: int) -> bool:
    """Disjoint or nested."""
    inter = j1 & j2
    return inter == 0 or inter == j1 or inter == j2


def nontrivial_pairs(P: Poset, conn=None) -> list[PiPair]:
    """The set Pi(P): unordered pairs of connected ideals that are
    neither disjoint nor nested, with union/intersection data filled."""
    if conn is None:
        conn = connected_ideals(P)
    pairs = []
    for j1, j2 in itertools.combinations(conn, 2):
        if not trivially_intersecting(j1, j2):
            comps = tuple(hasse_components(P, j1 & j2))
            pairs.append(PiPair(j1, j2, j1 | j2, comps))
    pairs.sort(key=lambda pr: (ideal_key(pr.j1), ideal_key(pr.j2)))
    return pairs


# -- labelling ----------------------------------------------------------


def is_naturally_labelled(P: Poset) -> bool:
    """True iff i <_P j implies i < j as integers."""
    return all(a < b for a, b in P.covers)


def lex_min_extension(P: Poset) -> list[int]:
    """Lexicographically least linear extension (greedy smallest minimal)."""
    w = []
    taken = 0
    for _ in range(P.n):
        p = min(q for q in P.minimal_elements(P.full_mask & ~taken))
        w.append(p)
        taken |= 1 << (p - 1)
    return w


def natural_relabel(P: Poset):
    """Relabel P along a linear extension so the result is naturally
    labelled.  Returns (Q, perm) with perm[old_label - 1] = new_label."""
    w = lex_min_extension(P)
    perm = [0] * P.n
    for newlabel, old in enumerate(w, start=1):
        perm[old - 1] = newlabel
    Q = Poset(P.n, [(perm[a - 1], perm[b - 1]) for a, b in P.covers])
    return Q, tuple(perm)


# -- induced subposet search --------------------------------------------


def induced_occurrences(P: Poset, Q: Poset) -> list[tuple[int, ...]]:
    """All injections i: Q -> P with i(q) <=_P i(q') iff q <=_Q q'.

    An occurrence is a tuple t with t[q-1] = image of q; the list is in
    lexicographic order of t.  Empty list means P is Q-free.
    """
    if Q.n > P.n:
        return []
    out = []
    image = [0] * Q.n

    def extend(q: int, used: int):
        if q > Q.n:
            out.append(tuple(image))
            return
        for p in range(1, P.n + 1):
            bit = 1 << (p - 1)
            if used & bit:
                continue
            ok = True
            for r in range(1, q):
                if Q.lt(r, q) != P.lt(image[r - 1], p) or Q.lt(q, r) != P.lt(
                    p, image[r - 1]
                ):
                    ok = False
                    break
            if ok:
                image[q - 1] = p
                extend(q + 1, used | bit)
        image[q - 1] = 0

    extend(1, 0)
    return out


# -- exhaustive poset enumeration (test-harness support) ----------------


def enumerate_posets(n: int):
    """Every labelled poset on {1..n} exactly once, for n <= 5."""
    if not 1 <= n <= 5:
        raise RangeError("enumerate_posets supports 1 <= n <= 5")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        lt = [[False] * (n + 1) for _ in range(n + 1)]
        for (a, b), c in zip(pairs, choice):
            if c == 1:
                lt[a][b] = True
            elif c == 2:
                lt[b][a] = True
        transitive = True
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if lt[a][b]:
                    for c in range(1, n + 1):
                        if lt[b][c] and not lt[a][c]:
                            transitive = False
                            break
                if not transitive:
                    break
            if not transitive:
                break
        if transitive:
            rels = [
                (a, b)
                for a in range(1, n + 1)
                for b in range(1, n + 1)
                if lt[a][b]
            ]
            yield Poset(n, rels)
