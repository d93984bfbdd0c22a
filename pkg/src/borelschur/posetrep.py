"""
Finite posets by Hasse covers: width, full-subposet pattern search,
Nazarova's wildness criterion, incomparability complements and convex hulls,
plus the bundled hom-functor poset `gamma_M`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources


@dataclass(frozen=True)
class Poset:
    """
    Immutable finite poset.  `covers` must be the irredundant Hasse diagram;
    construction rejects cycles and covers implied by transitivity.  The full
    order relation is precomputed as bitmasks over the element order.
    """

    elements: tuple
    covers: tuple[tuple, ...]
    _up: tuple[int, ...] = field(repr=False, default=None, compare=False)

    def __post_init__(self):
        index = {x: k for k, x in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise ValueError("duplicate elements")
        above: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in self.covers:
            if lo not in index or hi not in index:
                raise ValueError(f"cover ({lo}, {hi}) uses unknown elements")
            above[index[lo]].append(index[hi])
        n = len(self.elements)
        up = [None] * n
        state = [0] * n  # 0 new, 1 active, 2 done

        def close(k):
            if state[k] == 1:
                raise ValueError("cover relation has a cycle")
            if state[k] == 2:
                return up[k]
            state[k] = 1
            mask = 1 << k
            for j in above[k]:
                mask |= close(j)
            up[k] = mask
            state[k] = 2
            return mask

        for k in range(n):
            close(k)
        for lo, hi in self.covers:
            a, b = index[lo], index[hi]
            strictly_between = up[a] & ~(1 << a) & ~(1 << b)
            if any((strictly_between >> j) & 1 and (up[j] >> b) & 1 for j in range(n)):
                raise ValueError(f"cover ({lo}, {hi}) is implied by transitivity")
        object.__setattr__(self, "_up", tuple(up))
        object.__setattr__(self, "_index", index)

    # -- order queries ------------------------------------------------------

    def leq(self, a, b) -> bool:
        ia, ib = self._index[a], self._index[b]
        return bool((self._up[ia] >> ib) & 1)

    def comparable(self, a, b) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def up_set(self, a) -> frozenset:
        mask = self._up[self._index[a]]
        return frozenset(x for k, x in enumerate(self.elements) if (mask >> k) & 1)

    def down_set(self, a) -> frozenset:
        ia = self._index[a]
        return frozenset(
            x for k, x in enumerate(self.elements) if (self._up[k] >> ia) & 1
        )

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    # -- derived posets -----------------------------------------------------

    def induced(self, subset) -> "Poset":
        """Induced subposet, with the Hasse diagram recomputed."""
        keep = [x for x in self.elements if x in set(subset)]
        covers = []
        for a, b in itertools.permutations(keep, 2):
            if a != b and self.leq(a, b):
                if not any(
                    c not in (a, b) and self.leq(a, c) and self.leq(c, b) for c in keep
                ):
                    covers.append((a, b))
        return Poset(tuple(keep), tuple(covers))

    def incomparable_complement(self, subset) -> "Poset":
        """Induced subposet on the elements comparable with nothing in `subset`."""
        sub = [x for x in subset]
        rest = [
            x for x in self.elements if all(not self.comparable(x, w) for w in sub)
        ]
        return self.induced(rest)

    def convex_hull(self, subset) -> tuple:
        """All z with y <= z <= y' for some y, y' in the subset."""
        sub = [x for x in subset if x in self._index]
        return tuple(
            z
            for z in self.elements
            if any(self.leq(y, z) for y in sub) and any(self.leq(z, y) for y in sub)
        )

    def minimal_triples(self) -> list[tuple]:
        """Cover-chains x < y < z of two consecutive covers."""
        ups = {}
        for lo, hi in self.covers:
            ups.setdefault(lo, []).append(hi)
        out = []
        for x in self.elements:
            for y in ups.get(x, ()):
                for z in ups.get(y, ()):
                    out.append((x, y, z))
        return out

    # -- width ---------------------------------------------------------------

    def width(self) -> tuple[int, tuple]:
        """
        Maximum antichain size and one witness, by Dilworth through bipartite
        matching on the strict order (Koenig cover construction).
        """
        n = len(self.elements)
        succ = [
            [j for j in range(n) if j != i and (self._up[i] >> j) & 1]
            for i in range(n)
        ]
        match_right = [None] * n
        match_left = [None] * n

        def augment(i, seen):
            for j in succ[i]:
                if j in seen:
                    continue
                seen.add(j)
                if match_right[j] is None or augment(match_right[j], seen):
                    match_right[j] = i
                    match_left[i] = j
                    return True
            return False

        for i in range(n):
            augment(i, set())
        # alternating reachability from unmatched left vertices
        left_z = set(i for i in range(n) if match_left[i] is None)
        right_z: set[int] = set()
        frontier = list(left_z)
        while frontier:
            i = frontier.pop()
            for j in succ[i]:
                if j not in right_z:
                    right_z.add(j)
                    k = match_right[j]
                    if k is not None and k not in left_z:
                        left_z.add(k)
                        frontier.append(k)
        antichain = tuple(
            self.elements[i] for i in range(n) if i in left_z and i not in right_z
        )
        return len(antichain), antichain

    def antichains_of_size(self, k: int):
        """Brute-force enumeration; intended for desk-scale uniqueness checks."""
        for combo in itertools.combinations(self.elements, k):
            if all(not self.comparable(a, b) for a, b in itertools.combinations(combo, 2)):
                yield combo

    # -- pattern search -------------------------------------------------------

    def _relation_masks(self):
        """(strict-up, strict-down, incomparable) bitmasks per element index."""
        n = len(self.elements)
        full = (1 << n) - 1
        up = list(self._up)
        down = [0] * n
        for i in range(n):
            for j in range(n):
                if (up[j] >> i) & 1:
                    down[i] |= 1 << j
        sup = [up[i] & ~(1 << i) for i in range(n)]
        sdown = [down[i] & ~(1 << i) for i in range(n)]
        inc = [full & ~(up[i] | down[i]) for i in range(n)]
        return sup, sdown, inc

    def contains_full_subposet(self, pattern: "Poset"):
        """
        An injection of `pattern` that preserves and reflects comparability
        (a full subposet embedding), or None.  Backtracking over bitmask
        candidate domains, narrowed by forward checking and seeded by
        up/down comparability-degree pruning; the most constrained pattern
        element is assigned first.
        """
        sup, sdown, inc = self._relation_masks()
        psup, psdown, pinc = pattern._relation_masks()
        n = len(self.elements)
        m = len(pattern.elements)
        if m > n:
            return None
        full = (1 << n) - 1
        domains = []
        for q in range(m):
            mask = 0
            for x in range(n):
                if (
                    sup[x].bit_count() >= psup[q].bit_count()
                    and sdown[x].bit_count() >= psdown[q].bit_count()
                ):
                    mask |= 1 << x
            domains.append(mask)
        assignment = [None] * m

        def backtrack(domains, todo):
            if not todo:
                return True
            q = min(todo, key=lambda qq: domains[qq].bit_count())
            rest = [qq for qq in todo if qq != q]
            candidates = domains[q]
            while candidates:
                low = candidates & -candidates
                candidates ^= low
                x = low.bit_length() - 1
                narrowed = list(domains)
                ok = True
                for q2 in rest:
                    if (psup[q] >> q2) & 1:
                        allowed = sup[x]
                    elif (psdown[q] >> q2) & 1:
                        allowed = sdown[x]
                    else:
                        allowed = inc[x]
                    narrowed[q2] &= allowed
                    if not narrowed[q2]:
                        ok = False
                        break
                if ok:
                    assignment[q] = x
                    if backtrack(narrowed, rest):
                        return True
                    assignment[q] = None
            return False

        if not backtrack(domains, list(range(m))):
            return None
        return {
            pattern.elements[q]: self.elements[assignment[q]] for q in range(m)
        }

    # -- export ----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "covers": [list(c) for c in self.covers],
        }

    def to_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for x in self.elements:
            lines.append(f'  "{x}";')
        for lo, hi in self.covers:
            lines.append(f'  "{lo}" -> "{hi}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_json(data: dict) -> Poset:
    return Poset(tuple(data["elements"]), tuple(tuple(c) for c in data["covers"]))


# ---------------------------------------------------------------------------
# pattern constructors


def chain(k: int, tag="c") -> Poset:
    """Totally ordered k elements."""
    elems = tuple((tag, i) for i in range(k))
    return Poset(elems, tuple((elems[i], elems[i + 1]) for i in range(k - 1)))


def poset_n() -> Poset:
    """Four elements t1, t2, b1, b2 with t1 < b1, t1 < b2, t2 < b2."""
    return Poset(
        ("t1", "t2", "b1", "b2"), (("t1", "b1"), ("t1", "b2"), ("t2", "b2"))
    )


def disjoint_union(*parts: Poset) -> Poset:
    elements = []
    covers = []
    for idx, part in enumerate(parts):
        elements.extend((idx, x) for x in part.elements)
        covers.extend(((idx, lo), (idx, hi)) for lo, hi in part.covers)
    return Poset(tuple(elements), tuple(covers))


def chains(*lengths: int) -> Poset:
    """Disjoint union of chains, e.g. chains(1, 3, 4)."""
    return disjoint_union(*(chain(k) for k in lengths))


NAZAROVA_PATTERNS: tuple[tuple[str, Poset], ...] = (
    ("(1,1,1,1,1)", chains(1, 1, 1, 1, 1)),
    ("(1,1,1,2)", chains(1, 1, 1, 2)),
    ("(2,2,3)", chains(2, 2, 3)),
    ("(1,3,4)", chains(1, 3, 4)),
    ("(1,2,6)", chains(1, 2, 6)),
    ("(N,5)", disjoint_union(poset_n(), chain(5))),
)


def nazarova_wild(poset: Poset):
    """
    Nazarova's criterion: a poset is wild iff it contains one of the six
    critical posets as a full subposet.  Returns (flag, witness) where the
    witness is (pattern name, embedding) for wild inputs.
    """
    for name, pattern in NAZAROVA_PATTERNS:
        hit = poset.contains_full_subposet(pattern)
        if hit is not None:
            return True, (name, hit)
    return False, None


def gamma_M() -> Poset:
    """The bundled 33-element hom-functor poset (see data/gamma_M.json)."""
    data = json.loads(
        resources.files("borelschur.data").joinpath("gamma_M.json").read_text()
    )
    return from_json(data)
