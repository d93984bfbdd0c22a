"""
Multi-index and symmetric-group combinatorics.

Multi-indices are tuples with entries in ``1..n`` (values are 1-based, as in
the classical xi-labels); positions are 0-based, so a permutation is a tuple
``sigma`` of length r with ``sigma[k]`` the image of position ``k``, acting on
a multi-index by ``(i . sigma)[k] = i[sigma[k]]``.  Composition follows
``(s . t)(x) = s(t(x))``, which makes the action a right action.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import factorial

Perm = tuple[int, ...]
MultiIndex = tuple[int, ...]  # entries in 1..n
Composition = tuple[int, ...]  # n non-negative parts summing to r


def weight(i: tuple[int, ...], n: int) -> tuple[int, ...]:
    """
    Count occurrences of each value 1..n.

    >>> weight((1, 2, 1), 2)
    (2, 1)
    >>> weight((1, 1, 3), 3)
    (2, 0, 1)
    """
    counts = [0] * n
    for e in i:
        if not 1 <= e <= n:
            raise ValueError(f"multi-index entry {e} outside 1..{n}")
        counts[e - 1] += 1
    return tuple(counts)


def check_composition(lam: tuple[int, ...], r: int | None = None) -> None:
    if any(part < 0 for part in lam):
        raise ValueError(f"composition {lam} has a negative part")
    if r is not None and sum(lam) != r:
        raise ValueError(f"composition {lam} does not sum to {r}")


def compositions(n: int, r: int) -> list[tuple[int, ...]]:
    """All compositions of r into n non-negative parts, lexicographically."""
    if n == 1:
        return [(r,)]
    out = []
    for first in range(r + 1):
        out.extend((first,) + rest for rest in compositions(n - 1, r - first))
    return out


def dominance_leq(alpha: tuple[int, ...], beta: tuple[int, ...]) -> bool:
    """
    Dominance order: every prefix sum of alpha is <= that of beta.

    >>> dominance_leq((0, 2), (1, 1))
    True
    >>> dominance_leq((1, 1), (0, 2))
    False
    """
    if len(alpha) != len(beta) or sum(alpha) != sum(beta):
        raise ValueError("dominance compares compositions of equal n and r")
    total_a = total_b = 0
    for a, b in zip(alpha, beta):
        total_a += a
        total_b += b
        if total_a > total_b:
            return False
    return True


def multiindex_leq(i: tuple[int, ...], j: tuple[int, ...]) -> bool:
    """Componentwise comparison ``i_s <= j_s``."""
    if len(i) != len(j):
        raise ValueError("multi-indices of different degree")
    return all(a <= b for a, b in zip(i, j))


def standard_multiindex(lam: tuple[int, ...]) -> tuple[int, ...]:
    """
    The weakly increasing multi-index of weight lam.

    >>> standard_multiindex((1, 2, 0))
    (1, 2, 2)
    """
    check_composition(lam)
    out: list[int] = []
    for value, count in enumerate(lam, start=1):
        out.extend([value] * count)
    return tuple(out)


def shifted_standard(lam: tuple[int, ...], s: int, q: int) -> tuple[int, ...]:
    """
    The standard multi-index of weight ``lam + q*gamma_s`` where gamma_s moves
    q copies from value s+1 to value s (1 <= s <= n-1, q <= lam[s]).

    >>> shifted_standard((2, 2), 1, 1)
    (1, 1, 1, 2)
    """
    check_composition(lam)
    n = len(lam)
    if not 1 <= s <= n - 1:
        raise ValueError(f"s={s} outside 1..{n - 1}")
    if not 0 <= q <= lam[s]:
        raise ValueError(f"cannot move {q} copies, only {lam[s]} available at value {s + 1}")
    shifted = list(lam)
    shifted[s - 1] += q
    shifted[s] -= q
    return standard_multiindex(tuple(shifted))


# ---------------------------------------------------------------------------
# orbits of multi-index pairs


@dataclass(frozen=True, order=True)
class PairOrbit:
    """
    Canonical label for a diagonal symmetric-group orbit of a pair (i, j):
    the r column pairs (i_s, j_s) sorted lexicographically.  Two pairs lie in
    the same orbit iff their column multisets agree, so this form is constant
    on orbits and distinct across them.
    """

    i: tuple[int, ...]
    j: tuple[int, ...]
    n: int

    @property
    def r(self) -> int:
        return len(self.i)

    def columns(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.i, self.j))

    @property
    def row_weight(self) -> tuple[int, ...]:
        return weight(self.i, self.n)

    @property
    def col_weight(self) -> tuple[int, ...]:
        return weight(self.j, self.n)

    @property
    def is_diagonal(self) -> bool:
        return self.i == self.j

    def is_borel(self) -> bool:
        return multiindex_leq(self.i, self.j)

    def __str__(self) -> str:
        return f"ξ_{{{fmt_multiindex(self.i)},{fmt_multiindex(self.j)}}}"


def fmt_multiindex(i: tuple[int, ...]) -> str:
    """Digit string when all entries are single digits, else comma-separated."""
    if all(e <= 9 for e in i):
        return "".join(str(e) for e in i)
    return ",".join(str(e) for e in i)


def canonical_pair(i: tuple[int, ...], j: tuple[int, ...], n: int) -> PairOrbit:
    """
    Orbit-canonical form of the pair (i, j): sort column pairs.

    >>> p = canonical_pair((2, 1), (2, 2), 2)
    >>> p.i, p.j
    ((1, 2), (2, 2))
    """
    if len(i) != len(j):
        raise ValueError("multi-indices of different degree")
    weight(i, n), weight(j, n)  # validates entry ranges
    cols = sorted(zip(i, j))
    return PairOrbit(tuple(c[0] for c in cols), tuple(c[1] for c in cols), n)


def diagonal_orbit(lam: tuple[int, ...]) -> PairOrbit:
    """The idempotent label xi_lam for a composition lam."""
    ell = standard_multiindex(lam)
    return PairOrbit(ell, ell, len(lam))


# ---------------------------------------------------------------------------
# Young subgroups


@dataclass(frozen=True)
class YoungSubgroup:
    """
    Direct product of symmetric groups on the blocks of a set partition of
    positions 0..r-1.  Blocks are stored sorted; singletons are kept so the
    partition always covers the position set.
    """

    blocks: tuple[tuple[int, ...], ...]
    degree: int

    def __post_init__(self):
        seen = sorted(p for b in self.blocks for p in b)
        if seen != list(range(self.degree)):
            raise ValueError("blocks do not partition the position set")

    @property
    def order(self) -> int:
        return reduce(lambda acc, b: acc * factorial(len(b)), self.blocks, 1)

    def refines(self, other: "YoungSubgroup") -> bool:
        """True when every block of self sits inside a block of other."""
        if self.degree != other.degree:
            return False
        containing = {}
        for b in other.blocks:
            for p in b:
                containing[p] = b
        return all(all(containing[b[0]] == containing[p] for p in b) for b in self.blocks)

    def elements(self):
        """Iterate all elements as one-line permutation tuples."""
        r = self.degree
        blocks = [b for b in self.blocks if len(b) > 1]
        base = list(range(r))
        if not blocks:
            yield tuple(base)
            return
        for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
            sigma = base[:]
            for block, image in zip(blocks, images):
                for pos, img in zip(block, image):
                    sigma[pos] = img
            yield tuple(sigma)

    def generators(self) -> list[Perm]:
        """Adjacent transpositions inside each block."""
        gens = []
        for b in self.blocks:
            for t in range(len(b) - 1):
                sigma = list(range(self.degree))
                sigma[b[t]], sigma[b[t + 1]] = sigma[b[t + 1]], sigma[b[t]]
                gens.append(tuple(sigma))
        return gens

    def contains(self, sigma: Perm) -> bool:
        pos_block = {}
        for idx, b in enumerate(self.blocks):
            for p in b:
                pos_block[p] = idx
        return all(pos_block[sigma[p]] == pos_block[p] for p in range(self.degree))


def level_blocks(values: tuple) -> tuple[tuple[int, ...], ...]:
    """Partition positions by equal values, blocks ordered by first occurrence of sorted keys."""
    groups: dict = {}
    for pos, v in enumerate(values):
        groups.setdefault(v, []).append(pos)
    return tuple(tuple(groups[k]) for k in sorted(groups))


def stabilizer(i: tuple[int, ...]) -> YoungSubgroup:
    """
    Stabilizer of a multi-index in the symmetric group on positions.

    >>> stabilizer((1, 1, 2)).blocks
    ((0, 1), (2,))
    """
    return YoungSubgroup(level_blocks(i), len(i))


def stabilizer_pair(i: tuple[int, ...], j: tuple[int, ...]) -> YoungSubgroup:
    """Stabilizer of the pair: level sets of the column sequence."""
    if len(i) != len(j):
        raise ValueError("multi-indices of different degree")
    return YoungSubgroup(level_blocks(tuple(zip(i, j))), len(i))


def stabilizer_triple(i, j, h) -> YoungSubgroup:
    return YoungSubgroup(level_blocks(tuple(zip(i, j, h))), len(i))


def subgroup_index(a: YoungSubgroup, b: YoungSubgroup) -> int:
    """Index [a : b] for a Young subgroup b refining a; always exact."""
    if not b.refines(a):
        raise ValueError("index requires the blocks of b to refine those of a")
    return a.order // b.order


# ---------------------------------------------------------------------------
# permutation plumbing


def identity_perm(r: int) -> Perm:
    return tuple(range(r))


def compose(s: Perm, t: Perm) -> Perm:
    """(s . t)(x) = s(t(x))."""
    return tuple(s[x] for x in t)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for x, y in enumerate(s):
        out[y] = x
    return tuple(out)


def apply_perm(i: tuple, sigma: Perm) -> tuple:
    """Right action: (i . sigma)[k] = i[sigma[k]]."""
    return tuple(i[sigma[k]] for k in range(len(sigma)))


def align_to(target: tuple[int, ...], source: tuple[int, ...]) -> Perm:
    """
    A permutation sigma with ``source . sigma == target``, for multi-indices
    of equal weight; equal values are matched in position order (stable), so
    the choice is deterministic.
    """
    positions: dict = {}
    for pos, v in enumerate(source):
        positions.setdefault(v, []).append(pos)
    used = {v: 0 for v in positions}
    sigma = [0] * len(target)
    for k, v in enumerate(target):
        if v not in positions or used[v] >= len(positions[v]):
            raise ValueError("multi-indices are not in the same orbit")
        sigma[k] = positions[v][used[v]]
        used[v] += 1
    return tuple(sigma)


def double_coset_transversal(
    h: YoungSubgroup, g: YoungSubgroup, k: YoungSubgroup
) -> list[Perm]:
    """
    One representative per double coset ``h sigma k`` inside g, by brute-force
    partition of g.  Representatives are the minimal element of each coset in
    tuple order, returned ascending.
    """
    if not (h.refines(g) and k.refines(g)):
        raise ValueError("double cosets need h and k inside g (block refinement)")
    elems = sorted(g.elements())
    h_gens = h.generators()
    k_gens = k.generators()
    visited: set[Perm] = set()
    reps = []
    for sigma in elems:
        if sigma in visited:
            continue
        reps.append(sigma)
        stack = [sigma]
        visited.add(sigma)
        while stack:
            cur = stack.pop()
            for gen in h_gens:
                nxt = compose(gen, cur)
                if nxt not in visited:
                    visited.add(nxt)
                    stack.append(nxt)
            for gen in k_gens:
                nxt = compose(cur, gen)
                if nxt not in visited:
                    visited.add(nxt)
                    stack.append(nxt)
    return reps


def multiindices(n: int, r: int):
    """Iterate all of I(n, r)."""
    return itertools.product(range(1, n + 1), repeat=r)
